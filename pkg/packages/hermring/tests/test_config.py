"""Unit tests for configuration management"""

import json
import pytest
from pathlib import Path
from tempfile import TemporaryDirectory

from pydantic import ValidationError

from src.errors import UnsupportedCaseError
from src.pipeline.config import CONFIG_ENV, CONFIG_FILENAME, HermringConfig


def write_config(project_path: Path, config_data: dict) -> Path:
    config_file = project_path / CONFIG_FILENAME
    with open(config_file, 'w') as f:
        json.dump(config_data, f)
    return config_file


class TestHermringConfig:
    """Test HermringConfig class"""

    def test_load_valid_config(self):
        """Test loading a valid hermring.config.json"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            config_data = {
                'precision': {'trace_bound': 8, 'vv_prec': 17, 'jacobi_prec': 30},
                'cases': {'d7': {'disc': -7, 'lambdas': {'2': [0, 1]}}},
            }
            write_config(project_path, config_data)

            config = HermringConfig(project_path)

            assert config.has_config()
            assert config.get_raw_config() == config_data
            assert config.get_trace_bound() == 8
            assert config.get_vv_prec() == 17
            assert config.get_jacobi_prec() == 30
            assert config.get_jacobi_prec(cli_override=12) == 12

    def test_load_missing_config(self):
        """Test defaults when no config file exists"""
        with TemporaryDirectory() as tmpdir:
            config = HermringConfig(Path(tmpdir))

            assert not config.has_config()
            assert config.get_raw_config() == {}
            assert config.get_trace_bound() == 10
            assert config.get_vv_prec() == 26
            assert config.get_jacobi_prec() == 27
            assert config.get_max_order() == 6
            assert config.get_phi11_sign() == 1

    def test_load_invalid_json(self):
        """Test handling malformed JSON"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            with open(project_path / CONFIG_FILENAME, 'w') as f:
                f.write('{ invalid json }')

            with pytest.raises(ValueError, match="Invalid JSON"):
                HermringConfig(project_path)

    def test_comment_keys_ignored(self):
        """Test keys starting with '_' are not validated"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            write_config(project_path, {'_comment': 'frozen', 'phi11_sign': -1})

            config = HermringConfig(project_path)

            assert config.get_phi11_sign() == -1

    def test_cli_override_priority(self):
        """Test CLI override takes precedence over config"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            write_config(project_path, {'precision': {'trace_bound': 8, 'max_order': 4}, 'phi11_sign': -1})

            config = HermringConfig(project_path)

            assert config.get_trace_bound(cli_override=6) == 6
            assert config.get_max_order(cli_override=2) == 2
            assert config.get_phi11_sign(cli_override=1) == 1
            assert config.get_trace_bound() == 8

    def test_env_override(self, monkeypatch):
        """Test HERMRING_CONFIG points at another file"""
        with TemporaryDirectory() as tmpdir:
            other = Path(tmpdir) / 'other.json'
            with open(other, 'w') as f:
                json.dump({'output_dir': 'elsewhere'}, f)
            monkeypatch.setenv(CONFIG_ENV, str(other))

            config = HermringConfig(Path(tmpdir))

            assert config.config_path == other.resolve()
            assert config.get_output_dir() == Path(tmpdir).resolve() / 'elsewhere'

    def test_get_output_dir_default(self):
        """Test default output directory"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir).resolve()

            config = HermringConfig(project_path)
            output_dir = config.get_output_dir()

            assert output_dir.resolve() == (project_path / '.').resolve()

    def test_get_output_dir_cli_override(self):
        """Test CLI override for output directory"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir).resolve()
            write_config(project_path, {'output_dir': 'ledgers'})

            config = HermringConfig(project_path)
            output_dir = config.get_output_dir(cli_override='custom/output')

            assert output_dir.resolve() == (project_path / 'custom/output').resolve()

    def test_field_conventions(self):
        """Test labels, lambdas and anchors of a case"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            write_config(project_path, {
                'cases': {
                    'd7': {
                        'disc': -7,
                        'twisted_labels': {'3': 5, '5': 3, '6': 1},
                        'lambdas': {'1': [1, 0], '2': [0, 1]},
                        'anchors': ['P0H1(E4)'],
                    }
                }
            })

            config = HermringConfig(project_path)

            assert config.get_twisted_labels('d7') == {3: 5, 5: 3, 6: 1}
            assert config.get_lambdas('d7') == {1: (1, 0), 2: (0, 1)}
            assert config.get_anchors('d7') == ['P0H1(E4)']
            assert config.require_field('d7').disc == -7

    def test_missing_case(self):
        """Test a case without conventions falls back to the tables"""
        with TemporaryDirectory() as tmpdir:
            config = HermringConfig(Path(tmpdir))

            assert config.get_twisted_labels('d11') is None
            assert config.get_lambdas('d11') == {}
            assert config.get_anchors('d11') is None
            with pytest.raises(UnsupportedCaseError, match="No conventions for case 'd11'"):
                config.require_field('d11')

    def test_unsupported_disc(self):
        """Test a case over an unsupported field"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            write_config(project_path, {'cases': {'d3': {'disc': -3}}})

            with pytest.raises(ValidationError, match="Unsupported field discriminant"):
                HermringConfig(project_path)

    def test_bad_phi11_sign(self):
        """Test phi11_sign must be +-1"""
        with TemporaryDirectory() as tmpdir:
            project_path = Path(tmpdir)
            write_config(project_path, {'phi11_sign': 2})

            with pytest.raises(ValidationError, match="phi11_sign must be 1 or -1"):
                HermringConfig(project_path)

    def test_shipped_config(self):
        """Test the packaged hermring.config.json loads"""
        config = HermringConfig(Path(__file__).parent.parent)

        assert config.has_config()
        assert config.get_output_dir().name == 'ledgers'
        assert config.get_twisted_labels('d11') == {2: 8, 6: 7, 7: 2, 8: 6, 10: 1}
        assert len(config.get_anchors('d7')) == 8


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
