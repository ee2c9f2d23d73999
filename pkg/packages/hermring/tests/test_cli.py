"""Tests for the hermring command-line front end"""

import importlib.util
import json
from pathlib import Path
from tempfile import TemporaryDirectory

import pytest

SCRIPT = Path(__file__).parent.parent / 'scripts' / 'hermring.py'
PACKAGE = str(SCRIPT.parent.parent)


@pytest.fixture(scope='module')
def cli():
    spec = importlib.util.spec_from_file_location('hermring_cli', SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


class TestCommands:
    """Test subcommands end to end"""

    def test_dims(self, cli, capsys):
        """Test the d7 dimension table matches"""
        assert cli.main(['--project', PACKAGE, 'dims', '--case', 'd7']) == 0
        out = capsys.readouterr().out
        assert "✓ Loaded config from" in out
        assert "Matches the printed table for k <= 40" in out

    def test_intersections(self, cli, capsys):
        """Test the d7 intersection statements"""
        assert cli.main(['--project', PACKAGE, 'intersections', '--case', 'd7']) == 0
        out = capsys.readouterr().out
        assert "multiplicity 2" in out
        assert "❌" not in out

    def test_relations_verify_without_relations(self, cli, capsys):
        """Test Q(sqrt -11) has nothing to verify"""
        assert cli.main(['--project', PACKAGE, 'relations', 'verify', '--case', 'd11', '--prec', '6']) == 0
        assert "No printed relations for d11" in capsys.readouterr().out

    @pytest.mark.slow
    def test_relations_verify(self, cli, capsys):
        """Test all seven relations over Q(sqrt -7) pass"""
        assert cli.main(['--project', PACKAGE, 'relations', 'verify', '--case', 'd7', '--prec', '10']) == 0
        assert "7/7 pass" in capsys.readouterr().out

    @pytest.mark.slow
    def test_divisors(self, cli, capsys):
        """Test Borcherds divisors and vanishing orders over Q(sqrt -7)"""
        assert cli.main(['--project', PACKAGE, 'divisors', '--case', 'd7']) == 0
        out = capsys.readouterr().out
        assert "Borcherds product b7" in out
        assert "❌" not in out

    def test_catalog_writes_ledgers(self, cli, capsys):
        """Test --out writes one ledger per generator"""
        with TemporaryDirectory() as tmpdir:
            code = cli.main(['--project', tmpdir, 'catalog', '--level', '1', '--prec', '4', '--out', 'ledgers'])

            assert code == 0
            ledger = Path(tmpdir) / 'ledgers' / 'K1-E4.ledger'
            assert ledger.exists()
            assert ledger.read_text().startswith('kind: paramodular')
            assert "✓ Ledger saved to" in capsys.readouterr().out

    def test_catalog_jacobi_prec_from_config(self, cli, capsys):
        """Test precision.jacobi_prec reaches the catalog and --jacobi-prec overrides it"""
        with TemporaryDirectory() as tmpdir:
            with open(Path(tmpdir) / 'hermring.config.json', 'w') as f:
                json.dump({'precision': {'jacobi_prec': 1}}, f)

            assert cli.main(['--project', tmpdir, 'catalog', '--level', '1', '--prec', '4']) == 0
            assert cli.main(['--project', tmpdir, 'catalog', '--level', '1', '--prec', '4', '--jacobi-prec', '9']) == 0
            out = capsys.readouterr().out
            assert "✓ psi10: weight 10" in out


class TestUsageErrors:
    """Test exit status 2 on usage errors"""

    def test_missing_case(self, cli):
        """Test --case is required"""
        with pytest.raises(SystemExit) as excinfo:
            cli.main(['dims'])
        assert excinfo.value.code == 2

    def test_discover_needs_weight(self, cli, capsys):
        """Test relations discover without --weight"""
        with pytest.raises(SystemExit) as excinfo:
            cli.main(['relations', 'discover', '--case', 'd7'])
        assert excinfo.value.code == 2
        assert "needs --weight" in capsys.readouterr().err

    def test_single_pullback_needs_level(self, cli, capsys):
        """Test --name without --level and --order"""
        with pytest.raises(SystemExit) as excinfo:
            cli.main(['pullback', '--case', 'd7', '--name', 'b7'])
        assert excinfo.value.code == 2
        assert "--level and --order" in capsys.readouterr().err

    def test_invalid_config(self, cli, capsys):
        """Test a malformed hermring.config.json"""
        with TemporaryDirectory() as tmpdir:
            with open(Path(tmpdir) / 'hermring.config.json', 'w') as f:
                f.write('{ invalid json }')

            assert cli.main(['--project', tmpdir, 'dims', '--case', 'd7']) == 2
            assert "❌" in capsys.readouterr().err

    def test_invalid_config_values(self, cli):
        """Test a config that parses but does not validate"""
        with TemporaryDirectory() as tmpdir:
            with open(Path(tmpdir) / 'hermring.config.json', 'w') as f:
                json.dump({'phi11_sign': 3}, f)

            assert cli.main(['--project', tmpdir, 'dims', '--case', 'd7']) == 2


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
