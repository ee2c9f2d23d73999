"""Golden-data loading from the TOML tables under data/"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import toml

from src.errors import UnsupportedCaseError
from src.series.qseries import QSeries
from src.weilrep.vvform import TwistedSeries

DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / 'data'


def case_name(disc: int) -> str:
    """Table name of a field case: -7 -> 'd7'"""
    return f"d{-disc}"


def parse_rational(value) -> Fraction:
    """Coefficient as written in the tables: int or 'num/den' string"""
    return Fraction(str(value).replace(' ', ''))


class TableLoader:
    """Load golden data TOML files

    One file per case: d7.toml and d11.toml for the two fields,
    paramodular.toml for the paramodular facts. Loaded files are cached
    per instance.

    Example usage:
        loader = TableLoader()
        rows = loader.dimension_rows(-7)
        rows['full'][19]                  # 13, the dimension at k = 20
        seeds = loader.seeds(-7)
    """

    def __init__(self, data_dir: Optional[Path] = None):
        """Initialize TableLoader

        Args:
            data_dir: Directory containing the table TOML files (default: the
                package's data/ directory)
        """
        self.data_dir = Path(data_dir) if data_dir is not None else DEFAULT_DATA_DIR
        self._cache: Dict[str, Dict[str, Any]] = {}

    def load(self, table_name: str) -> Dict[str, Any]:
        """Load a table file

        Args:
            table_name: Name without the .toml extension, e.g. 'd7'

        Returns:
            Parsed TOML content

        Raises:
            FileNotFoundError: If the table file doesn't exist
            toml.TomlDecodeError: If the file is malformed
        """
        if table_name in self._cache:
            return self._cache[table_name]
        table_file = self.data_dir / f"{table_name}.toml"

        if not table_file.exists():
            raise FileNotFoundError(
                f"Table not found: {table_file}\n"
                f"Available tables: {self._list_available_tables()}"
            )

        with open(table_file, 'r') as f:
            self._cache[table_name] = toml.load(f)
        return self._cache[table_name]

    def section(self, table_name: str, section: str) -> Any:
        """A top-level section of a table

        Raises:
            KeyError: If the section is missing
        """
        table = self.load(table_name)
        if section not in table:
            raise KeyError(f"Table '{table_name}' missing required '{section}' section")
        return table[section]

    def _field_table(self, disc: int) -> str:
        name = case_name(disc)
        if name not in self.list_tables():
            raise UnsupportedCaseError(
                f"No golden data for d = {disc}. Available: {self._list_available_tables()}"
            )
        return name

    def dimension_rows(self, disc: int) -> Dict[str, List[int]]:
        """Rows 'full', 'sym' and 'maass' of the dimension table; index i holds k = i + 1"""
        rows = self.section(self._field_table(disc), 'dimensions')
        return {name: [int(v) for v in values] for name, values in rows.items()}

    def seeds(self, disc: int) -> List[Dict[str, Any]]:
        """Printed input forms in table order"""
        return list(self.section(self._field_table(disc), 'seeds'))

    def seed(self, disc: int, name: str) -> Dict[str, Any]:
        for record in self.seeds(disc):
            if record['name'] == name:
                return record
        names = ', '.join(r['name'] for r in self.seeds(disc))
        raise KeyError(f"No seed '{name}' for d = {disc}. Available: {names}")

    def twisted_labels(self, disc: int) -> Dict[int, int]:
        """Residue -> label g of the twisted sums, as printed"""
        labels = self.section(self._field_table(disc), 'twisted_labels')
        return {int(residue): int(label) for residue, label in labels.items()}

    def pullback_cells(self, disc: int) -> List[Dict[str, Any]]:
        return list(self.section(self._field_table(disc), 'pullbacks'))

    def divisors(self, disc: int) -> Dict[str, Dict[str, Any]]:
        return dict(self.section(self._field_table(disc), 'divisors'))

    def intersections(self, disc: int) -> Dict[str, Dict[str, Any]]:
        return dict(self.section(self._field_table(disc), 'intersections'))

    def relations(self, disc: int) -> List[Dict[str, Any]]:
        """Printed relations; empty when the table records none"""
        return list(self.load(self._field_table(disc)).get('relations', []))

    def hilbert_records(self, disc: int) -> Dict[str, Dict[str, Any]]:
        """Printed closed forms 'sym', 'full' and 'even'"""
        return dict(self.section(self._field_table(disc), 'hilbert'))

    def generator_names(self, disc: int) -> List[str]:
        return list(self.section(self._field_table(disc), 'generators'))

    def principal_parts(self, disc: int) -> List[Dict[str, Any]]:
        return list(self.load(self._field_table(disc)).get('principal_parts', []))

    def five_halves(self) -> Dict[int, QSeries]:
        """The printed weight 5/2 series, keyed by m"""
        records = self.section('paramodular', 'five_halves')
        return {int(m): series_from_terms(r['terms'], r['prec']) for m, r in records.items()}

    def _list_available_tables(self) -> str:
        """List available table files

        Returns:
            Comma-separated list of available table names
        """
        if not self.data_dir.exists():
            return "None (data directory not found)"

        tables = [p.stem for p in self.data_dir.glob('*.toml')]
        return ', '.join(sorted(tables)) if tables else 'None'

    def list_tables(self) -> list[str]:
        """List available table names

        Returns:
            List of table names (without .toml extension)
        """
        if not self.data_dir.exists():
            return []

        return sorted([p.stem for p in self.data_dir.glob('*.toml')])


def series_from_terms(terms, prec: int) -> QSeries:
    """QSeries from [[exponent, coefficient], ...]"""
    return QSeries({int(e): parse_rational(c) for e, c in terms}, int(prec))


def twisted_from_terms(terms, prec: int, p: int) -> TwistedSeries:
    """TwistedSeries from [[exponent, label, coefficient], ...]"""
    return TwistedSeries(p, {int(e): (int(g), parse_rational(c)) for e, g, c in terms}, int(prec))
