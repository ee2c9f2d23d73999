"""
hermring.py - Command-line front end for Hermitian modular form computations

Every subcommand is a thin wrapper over one library operation. Results are
printed as status lines; --out writes plain-text coefficient ledgers.

Usage:
    # Vector-valued input forms (basis of M_kappa(rho*)):
    python scripts/hermring.py vv --disc -7 --weight 3 --prec 20

    # Generators as Maass lifts, written to ledgers:
    python scripts/hermring.py lift --case d7 --name b7 --out ledgers/

    # One pullback, or the whole printed pullback table:
    python scripts/hermring.py pullback --case d7 --name b7 --level 2 --order 1
    python scripts/hermring.py pullback --case d11

    # Relations:
    python scripts/hermring.py relations verify --case d7 --prec 10
    python scripts/hermring.py relations discover --case d11 --weight 13

    # Dimension tables, intersections, divisors and paramodular catalogs:
    python scripts/hermring.py dims --case d11 --kmax 40
    python scripts/hermring.py intersections --case d7
    python scripts/hermring.py divisors --case d11
    python scripts/hermring.py catalog --level 3 --prec 8 --out ledgers/

Exit codes: 0 on success, 1 on a mathematical failure, 2 on a usage error.

Requirements:
    - hermring.config.json in --project (or HERMRING_CONFIG in the environment or .env)
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

# Add package directory to path for src imports
package_dir = Path(__file__).parent.parent.resolve()
sys.path.insert(0, str(package_dir))

from src.errors import HermringError, UnsupportedCaseError
from src.hermitian.borcherds import PrincipalPart, borcherds_divisor_weight, divisor_from_records
from src.hermitian.expansion import symmetry_type
from src.hermitian.intersections import SUPPORTED_PAIRS, heegner_intersection_data
from src.hermitian.pullback import default_lambda, pullback, vanishing_order
from src.io.ledger_writer import LedgerWriter
from src.jacobi.catalog import generator_catalog
from src.jacobi.paramodular import param_linear_solve
from src.pipeline.config import HermringConfig
from src.ring.generators import case_disc, generator_set
from src.ring.hilbert import dimension_table
from src.ring.pullback_table import CellStatus, pullback_table
from src.ring.relations import (
    MonomialEvaluator,
    monomial_span,
    printed_relations,
    relation_discover,
    relation_verify,
)
from src.tables.loader import TableLoader, case_name, parse_rational
from src.weilrep.basis import vv_basis, vv_dimension_expected
from src.weilrep.fqm import fqm_for_field
from src.weilrep.vvform import bb_map, twisted_map

CASE_CHOICES = ['d7', 'd11']


def format_series(terms, limit: int = 12) -> str:
    """'1 + 14q^3 + 42q^5 + ...' from (exponent, coefficient) pairs"""
    terms = list(terms)
    parts = []
    for e, c in terms[:limit]:
        monomial = '' if e == 0 else ('q' if e == 1 else f"q^{e}")
        coefficient = str(c) if (abs(c) != 1 or not monomial) else ('-' if c < 0 else '')
        parts.append(f"{coefficient}{monomial}")
    text = ' + '.join(parts).replace('+ -', '- ') or '0'
    return text + (' + ...' if len(terms) > limit else '')


def _combination(combination) -> str:
    if not combination:
        return '0'
    return ' + '.join(f"({c})*{label}" for label, c in combination.items())


def _ledger_dir(config: HermringConfig, args) -> Optional[Path]:
    if not args.out:
        return None
    out = config.get_output_dir(cli_override=args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_vv(args, config: HermringConfig) -> int:
    disc = args.disc
    fqm = fqm_for_field(disc)
    prec = config.get_vv_prec(args.prec)
    basis = vv_basis(fqm, args.weight, prec)
    print(f"✓ dim M_{args.weight}(rho*) = {vv_dimension_expected(fqm, args.weight)} for d = {disc}")
    labels = config.get_twisted_labels(case_name(disc)) or TableLoader().twisted_labels(disc)
    out = _ledger_dir(config, args)
    for i, f in enumerate(basis):
        if args.weight % 2:
            image = bb_map(f)
            print(f"  [{i}] {format_series((e[0], c) for e, c in image.items())}")
        else:
            image = twisted_map(f, labels)
            terms = ', '.join(f"{c}*chi({g})q^{m}" for m, (g, c) in sorted(image.terms.items())[:8])
            print(f"  [{i}] {terms or '0'}")
        if out:
            path = out / f"vv-{case_name(disc)}-k{args.weight}-{i}.ledger"
            LedgerWriter.write(f, path)
            print(f"✓ Ledger saved to {path}")
    return 0


def cmd_lift(args, config: HermringConfig) -> int:
    prec = config.get_trace_bound(args.prec)
    gens = generator_set(args.case, prec, labels=config.get_twisted_labels(args.case))
    names = [args.name] if args.name else gens.names()
    out = _ledger_dir(config, args)
    for name in names:
        F = gens[name]
        print(f"✓ {name}: weight {F.weight}, {symmetry_type(F).value}, {len(F.coeffs)} coefficients to trace {prec}")
        if out:
            path = out / f"{args.case}-{name}.ledger"
            LedgerWriter.write(F, path)
            print(f"✓ Ledger saved to {path}")
    return 0


def cmd_pullback(args, config: HermringConfig) -> int:
    prec = config.get_trace_bound(args.prec)
    lambdas = config.get_lambdas(args.case)
    phi11_sign = config.get_phi11_sign(args.phi11_sign)
    if not args.name:
        report = pullback_table(
            args.case, prec, lambdas=lambdas, phi11_sign=phi11_sign,
            anchors=config.get_anchors(args.case), jacobi_prec=config.get_jacobi_prec(),
        )
        for (level, order, parity), s in sorted(report.scalars.items()):
            print(f"✓ Scalar for H{level}, N = {order}, {'odd' if parity else 'even'} k: {s}")
        for result in report.results:
            mark = '❌' if result.status == CellStatus.FAIL else '✓'
            detail = f" ({result.reason})" if result.reason else ''
            print(f"{mark} {result.cell.describe()}: {result.status.value}{detail}")
        print(f"✓ {report.summary()}" if report.all_passed else f"❌ {report.summary()}")
        return 0 if report.all_passed else 1
    gens = generator_set(args.case, prec, labels=config.get_twisted_labels(args.case))
    lam = lambdas.get(args.level)
    P = pullback(gens[args.name], args.level, lam, args.order)
    catalog = generator_catalog(args.level, prec, phi11_sign, config.get_jacobi_prec())
    combination, unique = param_linear_solve(P, catalog.forms)
    note = '' if unique else ' (one of several expressions)'
    print(f"✓ P{args.order}H{args.level}({args.name}) = {_combination(combination)}{note}")
    out = _ledger_dir(config, args)
    if out:
        path = out / f"{args.case}-{args.name}-P{args.order}H{args.level}.ledger"
        LedgerWriter.write(P, path)
        print(f"✓ Ledger saved to {path}")
    return 0


def cmd_relations(args, config: HermringConfig) -> int:
    prec = config.get_trace_bound(args.prec)
    gens = generator_set(args.case, prec, labels=config.get_twisted_labels(args.case))
    evaluator = MonomialEvaluator(gens, prec)
    if args.action == 'verify':
        relations = printed_relations(case_disc(args.case))
        if not relations:
            print(f"✓ No printed relations for {args.case}")
            return 0
        passed = 0
        for i, rel in enumerate(relations, 1):
            if relation_verify(rel, gens, prec, evaluator):
                passed += 1
                print(f"✓ Verified relation {i}/{len(relations)}: {rel}")
            else:
                print(f"❌ Relation {i}/{len(relations)} fails: {rel}")
        print(f"{passed}/{len(relations)} pass")
        return 0 if passed == len(relations) else 1
    span = monomial_span(gens, args.weight, prec, evaluator)
    relations = relation_discover(gens, args.weight, prec, evaluator)
    print(f"✓ Weight {args.weight}: {len(span.monomials)} monomials, rank {span.rank}, {len(relations)} relations")
    for rel in relations:
        print(f"  {rel}")
    return 0


def cmd_dims(args, config: HermringConfig) -> int:
    table = dimension_table(args.case, args.kmax)
    print(table.render())
    rows = TableLoader().dimension_rows(case_disc(args.case))
    mismatches = [
        f"{name} at k = {k}"
        for name in ('full', 'sym', 'maass')
        for k in table.weights()
        if k <= len(rows[name]) and table.cell(name, k) != rows[name][k - 1]
    ]
    if mismatches:
        raise HermringError(f"Dimension table differs from the printed one: {', '.join(mismatches)}")
    print(f"✓ Matches the printed table for k <= {min(args.kmax, len(rows['full']))}")
    return 0


def cmd_intersections(args, config: HermringConfig) -> int:
    disc = case_disc(args.case)
    for d, m in SUPPORTED_PAIRS:
        if d != disc:
            continue
        data = heegner_intersection_data(d, m)
        print(f"✓ Phi_{m} = {format_series((e[0], c) for e, c in data.phi.items())}")
        mark = '✓' if data.five_halves_matches else '❌'
        print(f"{mark} Weight 5/2 series for m = {m} matches the printed one")
        print(f"✓ H{m} meets H{data.partner} with multiplicity {data.multiplicity}: {data.statements[0]}")
    return 0


def cmd_divisors(args, config: HermringConfig) -> int:
    disc = case_disc(args.case)
    loader = TableLoader()
    prec = config.get_trace_bound(args.prec)
    max_order = config.get_max_order(args.max_order)
    records = loader.divisors(disc)
    divisors = divisor_from_records({name: r['divisor'] for name, r in records.items()})
    fqm = fqm_for_field(disc)
    failures = 0
    for record in loader.principal_parts(disc):
        coeffs = {(g, parse_rational(n)): int(c) for g, n, c in record['terms']}
        data = borcherds_divisor_weight(PrincipalPart(fqm, coeffs, int(record['constant'])))
        matched = data.divisor.terms == divisors[record['name']].terms
        failures += not matched
        mark = '✓' if matched else '❌'
        print(f"{mark} Borcherds product {record['name']}: divisor {data.divisor}, weight {data.weight}")
    gens = generator_set(args.case, prec, labels=config.get_twisted_labels(args.case))
    lambdas = config.get_lambdas(args.case)
    for name, divisor in divisors.items():
        if name not in gens:
            continue
        for D, mult in divisor.terms.items():
            try:
                lam = lambdas.get(D) or default_lambda(disc, D)
            except UnsupportedCaseError:
                print(f"  {name} on H{D}: no primitive element of norm {D}, not computed")
                continue
            order = vanishing_order(gens[name], D, lam, max_order)
            found = f">{max_order}" if order is None else str(order)
            failures += order != mult
            mark = '✓' if order == mult else '❌'
            print(f"{mark} {name} vanishes to order {found} on H{D} (divisor says {mult})")
    return 1 if failures else 0


def cmd_catalog(args, config: HermringConfig) -> int:
    prec = config.get_trace_bound(args.prec)
    catalog = generator_catalog(
        args.level, prec, config.get_phi11_sign(args.phi11_sign), config.get_jacobi_prec(args.jacobi_prec)
    )
    out = _ledger_dir(config, args)
    for name, F in catalog.forms.items():
        print(f"✓ {name}: weight {F.weight}, {len(F.coeffs)} coefficients to trace {prec}")
        if out:
            path = out / f"K{args.level}-{name}.ledger"
            LedgerWriter.write(F, path)
            print(f"✓ Ledger saved to {path}")
    for name, weight in sorted(catalog.registered.items()):
        print(f"  {name}: weight {weight}, registered without expansion")
    return 0


COMMANDS = {
    'vv': cmd_vv,
    'lift': cmd_lift,
    'pullback': cmd_pullback,
    'relations': cmd_relations,
    'dims': cmd_dims,
    'intersections': cmd_intersections,
    'divisors': cmd_divisors,
    'catalog': cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Hermitian modular forms over Q(sqrt -7) and Q(sqrt -11)')
    parser.add_argument('--project', default=str(package_dir), help='Directory holding hermring.config.json')
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p, case=True):
        if case:
            p.add_argument('--case', choices=CASE_CHOICES, required=True, help='Field case')
        p.add_argument('--prec', type=int, help='Precision (overrides config)')
        p.add_argument('--out', help='Ledger output directory (relative to --project)')
        return p

    vv = common(sub.add_parser('vv', help='Basis of vector-valued input forms'), case=False)
    vv.add_argument('--disc', type=int, choices=[-7, -11], required=True, help='Field discriminant')
    vv.add_argument('--weight', type=int, required=True, help='Weight kappa = k - 1')

    lift = common(sub.add_parser('lift', help='Generators as Maass lifts'))
    lift.add_argument('--name', help='Generator name (default: all)')

    pb = common(sub.add_parser('pullback', help='Pullbacks to Heegner divisors'))
    pb.add_argument('--name', help='Generator name (default: the whole printed table)')
    pb.add_argument('--level', type=int, choices=[1, 2, 3], help='Divisor H_l')
    pb.add_argument('--order', type=int, help='Taylor order N')
    pb.add_argument('--phi11-sign', type=int, choices=[1, -1], help='Orientation of phi11 (overrides config)')

    rel = common(sub.add_parser('relations', help='Verify or discover relations'))
    rel.add_argument('action', choices=['verify', 'discover'])
    rel.add_argument('--weight', type=int, help='Weight for discover')

    dims = sub.add_parser('dims', help='Dimension tables')
    dims.add_argument('--case', choices=CASE_CHOICES, required=True, help='Field case')
    dims.add_argument('--kmax', type=int, default=40, help='Largest weight')

    inter = sub.add_parser('intersections', help='Intersections of Heegner divisors')
    inter.add_argument('--case', choices=CASE_CHOICES, required=True, help='Field case')

    div = common(sub.add_parser('divisors', help='Divisors of Borcherds products and vanishing orders'))
    div.add_argument('--max-order', type=int, help='Largest Taylor order tried (overrides config)')

    cat = common(sub.add_parser('catalog', help='Paramodular generator catalog'), case=False)
    cat.add_argument('--level', type=int, choices=[1, 2, 3], required=True, help='Paramodular level')
    cat.add_argument('--phi11-sign', type=int, choices=[1, -1], help='Orientation of phi11 (overrides config)')
    cat.add_argument('--jacobi-prec', type=int, help='Floor for the Jacobi precision (overrides config)')
    return parser


def check_usage(parser: argparse.ArgumentParser, args) -> None:
    """Option combinations argparse cannot express; exits with status 2"""
    if args.command == 'pullback' and args.name and (args.level is None or args.order is None):
        parser.error('a single pullback needs --level and --order')
    if args.command == 'relations' and args.action == 'discover' and args.weight is None:
        parser.error('relations discover needs --weight')


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    check_usage(parser, args)
    try:
        config = HermringConfig(Path(args.project))
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2
    if config.has_config():
        print(f"✓ Loaded config from {config.config_path}")
    try:
        return COMMANDS[args.command](args, config)
    except HermringError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
