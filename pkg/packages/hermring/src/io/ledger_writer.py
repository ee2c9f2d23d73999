"""Ledger writer for truncated expansions"""

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Tuple, Union

from src.hermitian.expansion import HermExp, symmetry_type
from src.jacobi.paramodular import ParamExp
from src.schemas.ledger import LedgerHeader, LedgerKind
from src.weilrep.vvform import VVForm

Expansion = Union[HermExp, ParamExp, VVForm]

HEADER_ORDER = ('kind', 'disc', 'level', 'index', 'weight', 'prec', 'name', 'symmetry', 'format_version')


def format_rational(c: Fraction) -> str:
    """'7' or '-22/85'"""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LedgerWriter:
    """Write expansions as plain-text coefficient ledgers

    Records are sorted by index tuple, so two equal expansions always give
    byte-identical files.

    Example usage:
        LedgerWriter.write(gens['E4'], Path('ledgers/d7-E4.ledger'))
        text = LedgerWriter.serialize(catalog['phi8'])
    """

    @staticmethod
    def header_for(f: Expansion) -> LedgerHeader:
        """Header describing an expansion"""
        if isinstance(f, HermExp):
            return LedgerHeader(
                kind=LedgerKind.HERMITIAN,
                disc=f.disc,
                weight=format_rational(f.weight),
                prec=f.prec,
                name=f.name,
                symmetry=symmetry_type(f).value,
            )
        if isinstance(f, ParamExp):
            return LedgerHeader(
                kind=LedgerKind.PARAMODULAR,
                level=f.level,
                weight=format_rational(f.weight),
                prec=f.prec,
                name=f.name,
            )
        return LedgerHeader(
            kind=LedgerKind.VECTOR,
            disc=f.fqm.disc,
            index=f.fqm.jacobi_index,
            weight=format_rational(f.weight),
            prec=f.prec,
        )

    @staticmethod
    def records(f: Expansion) -> Iterable[Tuple[Tuple[int, ...], Fraction]]:
        """(index tuple, coefficient) in sorted order

        Hermitian indices are (a, x, y, b), paramodular (n, r, m) and vector
        (gamma, D*n).
        """
        if isinstance(f, (HermExp, ParamExp)):
            return sorted(f.coeffs.items())
        return sorted(
            ((g, m), c)
            for g, series in f.components.items()
            for (m,), c in series.items()
        )

    @staticmethod
    def serialize(f: Expansion) -> str:
        """Ledger text of an expansion

        Format:
            kind: hermitian
            disc: -7
            weight: 4
            prec: 10
            name: E4
            symmetry: symmetric
            format-version: 1

            0 0 0 0 1
            0 0 0 1 240
            ...
        """
        header = LedgerWriter.header_for(f).model_dump()
        text = ''
        for key in HEADER_ORDER:
            value = header[key]
            if value is None or value == '':
                continue
            if hasattr(value, 'value'):
                value = value.value
            text += f"{key.replace('_', '-')}: {value}\n"
        text += "\n"
        for index, c in LedgerWriter.records(f):
            text += ' '.join(str(i) for i in index) + f" {format_rational(c)}\n"
        return text

    @staticmethod
    def write(f: Expansion, output_path: Path) -> None:
        """Write an expansion to a ledger file

        Args:
            f: HermExp, ParamExp or VVForm
            output_path: Path to output ledger file
        """
        # Ensure output directory exists
        output_path.parent.mkdir(parents=True, exist_ok=True)

        with open(output_path, 'w', encoding='utf-8') as out:
            out.write(LedgerWriter.serialize(f))
