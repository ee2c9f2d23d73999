"""Configuration management with CLI override support"""

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.errors import UnsupportedCaseError
from src.schemas.config import ConventionSet, FieldConventions

CONFIG_FILENAME = 'hermring.config.json'
CONFIG_ENV = 'HERMRING_CONFIG'


class HermringConfig:
    """Load and manage hermring.config.json with CLI overrides

    The file is looked up in the project directory unless the environment
    variable HERMRING_CONFIG names another path. Every getter follows
    Priority: CLI > config > default.

    Example usage:
        config = HermringConfig(Path('/path/to/project'))
        prec = config.get_trace_bound(cli_override=8)
        labels = config.get_twisted_labels('d7')
    """

    def __init__(self, project_path: Path):
        """Initialize HermringConfig

        Args:
            project_path: Directory containing hermring.config.json

        Raises:
            ValueError: If the file is not valid JSON
            pydantic.ValidationError: If the content violates the schema
        """
        self.project_path = Path(project_path).resolve()
        override = os.environ.get(CONFIG_ENV)
        self.config_path = Path(override).resolve() if override else self.project_path / CONFIG_FILENAME
        self.config = self._load_config()
        self.conventions = ConventionSet.model_validate(
            {key: value for key, value in self.config.items() if not key.startswith('_')}
        )

    def _load_config(self) -> Dict[str, Any]:
        """Load the config file if it exists

        Returns:
            Dictionary containing configuration, or empty dict if file doesn't exist
        """
        if not self.config_path.exists():
            return {}

        try:
            with open(self.config_path, 'r') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(
                f"Invalid JSON in {self.config_path}: {e}"
            )

    def get_trace_bound(self, cli_override: Optional[int] = None) -> int:
        """Trace bound B

        Priority: CLI > config > default (10)
        """
        if cli_override is not None:
            return cli_override
        return self.conventions.precision.trace_bound

    def get_vv_prec(self, cli_override: Optional[int] = None) -> int:
        """Vector-valued precision

        Priority: CLI > config > default (26)
        """
        if cli_override is not None:
            return cli_override
        return self.conventions.precision.vv_prec

    def get_jacobi_prec(self, cli_override: Optional[int] = None) -> int:
        if cli_override is not None:
            return cli_override
        return self.conventions.precision.jacobi_prec

    def get_max_order(self, cli_override: Optional[int] = None) -> int:
        if cli_override is not None:
            return cli_override
        return self.conventions.precision.max_order

    def get_phi11_sign(self, cli_override: Optional[int] = None) -> int:
        if cli_override is not None:
            return cli_override
        return self.conventions.phi11_sign

    def get_output_dir(self, cli_override: Optional[str] = None) -> Path:
        """Directory for ledgers

        Priority: CLI > config > default ('.')
        """
        output_str = cli_override or self.conventions.output_dir
        return self.project_path / output_str

    def get_field(self, case: str) -> Optional[FieldConventions]:
        """Conventions recorded for a case such as 'd7', or None"""
        return self.conventions.cases.get(case)

    def get_twisted_labels(self, case: str) -> Optional[Dict[int, int]]:
        """Twisted-sum labels of a case, or None to use the golden tables"""
        conventions = self.get_field(case)
        if conventions is None or not conventions.twisted_labels:
            return None
        return dict(conventions.twisted_labels)

    def get_lambdas(self, case: str) -> Dict[int, Tuple[int, int]]:
        """Lambda per level; levels without an entry use default_lambda"""
        conventions = self.get_field(case)
        return dict(conventions.lambdas) if conventions else {}

    def get_anchors(self, case: str) -> Optional[List[str]]:
        """Anchor cells of a case, or None to use the flags in the golden tables"""
        conventions = self.get_field(case)
        return list(conventions.anchors) if conventions and conventions.anchors is not None else None

    def require_field(self, case: str) -> FieldConventions:
        """Conventions of a case

        Raises:
            UnsupportedCaseError: If the case has no entry
        """
        conventions = self.get_field(case)
        if conventions is None:
            available = ', '.join(sorted(self.conventions.cases)) or 'None'
            raise UnsupportedCaseError(f"No conventions for case '{case}'. Available: {available}")
        return conventions

    def has_config(self) -> bool:
        """Check if the config file exists"""
        return self.config_path.exists()

    def get_raw_config(self) -> Dict[str, Any]:
        """Get the raw configuration dictionary"""
        return self.config
