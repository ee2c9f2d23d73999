"""Ledger parser for reading coefficient ledgers back into expansions"""

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import ValidationError

from src.errors import HermringError, LedgerFormatError
from src.hermitian.expansion import HermExp
from src.jacobi.paramodular import ParamExp
from src.io.ledger_writer import Expansion
from src.schemas.ledger import LedgerHeader, LedgerKind
from src.series.qseries import QSeries
from src.weilrep.fqm import fqm_for_field, fqm_for_jacobi_index
from src.weilrep.vvform import VVForm

RECORD_WIDTH = {
    LedgerKind.HERMITIAN: 4,
    LedgerKind.PARAMODULAR: 3,
    LedgerKind.VECTOR: 2,
}


class LedgerParser:
    """Parse ledgers written by LedgerWriter

    Example usage:
        E4 = LedgerParser.read(Path('ledgers/d7-E4.ledger'))
        LedgerParser.parse(LedgerWriter.serialize(E4)) == E4     # True
    """

    @staticmethod
    def parse_header(lines: List[str]) -> LedgerHeader:
        """Header model from 'key: value' lines

        Raises:
            LedgerFormatError: On a malformed line or an invalid header
        """
        values: Dict[str, str] = {}
        for line in lines:
            key, sep, value = line.partition(':')
            if not sep:
                raise LedgerFormatError(f"Header line without ':': '{line}'")
            values[key.strip().replace('-', '_')] = value.strip()
        try:
            return LedgerHeader.model_validate(values)
        except ValidationError as e:
            raise LedgerFormatError(f"Invalid ledger header: {e}")

    @staticmethod
    def parse_records(lines: List[str], width: int) -> List[Tuple[Tuple[int, ...], Fraction]]:
        records = []
        for number, line in enumerate(lines, 1):
            fields = line.split()
            if len(fields) != width + 1:
                raise LedgerFormatError(
                    f"Record {number} has {len(fields)} fields, expected {width + 1}: '{line}'"
                )
            try:
                index = tuple(int(x) for x in fields[:width])
                c = Fraction(fields[width])
            except ValueError:
                raise LedgerFormatError(f"Record {number} is not numeric: '{line}'")
            records.append((index, c))
        return records

    @staticmethod
    def parse(text: str) -> Expansion:
        """Expansion from ledger text

        Raises:
            LedgerFormatError: If the text is not a valid ledger, or its
                records do not form a valid expansion
        """
        head, sep, body = text.partition('\n\n')
        if not sep:
            raise LedgerFormatError("Ledger has no blank line between header and records")
        header = LedgerParser.parse_header([l for l in head.splitlines() if l.strip()])
        records = LedgerParser.parse_records(
            [l for l in body.splitlines() if l.strip()], RECORD_WIDTH[header.kind]
        )
        weight = Fraction(header.weight)
        try:
            if header.kind == LedgerKind.HERMITIAN:
                return HermExp(header.disc, int(weight), dict(records), header.prec, header.name)
            if header.kind == LedgerKind.PARAMODULAR:
                return ParamExp(header.level, int(weight), dict(records), header.prec, header.name)
            fqm = fqm_for_field(header.disc) if header.disc is not None else fqm_for_jacobi_index(header.index)
            components: Dict[int, Dict[int, Fraction]] = {}
            for (g, m), c in records:
                components.setdefault(g, {})[m] = c
            return VVForm(
                fqm,
                weight,
                {g: QSeries(coeffs, header.prec) for g, coeffs in components.items()},
                header.prec,
            )
        except HermringError as e:
            if isinstance(e, LedgerFormatError):
                raise
            raise LedgerFormatError(f"Ledger records do not form a valid expansion: {e}")

    @staticmethod
    def read(ledger_file: Path) -> Expansion:
        """Read a ledger file

        Raises:
            FileNotFoundError: If the file doesn't exist
            LedgerFormatError: If the content is malformed
        """
        if not ledger_file.exists():
            raise FileNotFoundError(f"Ledger not found: {ledger_file}")

        with open(ledger_file, 'r', encoding='utf-8') as f:
            return LedgerParser.parse(f.read())
