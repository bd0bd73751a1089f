import json
import subprocess
import sys

import pytest

from origamis.catalog import (
    CatalogError,
    canonical_origamis,
    catalog_query,
    catalog_write,
    enumerate_origamis,
)
from origamis.cli import main


class TestEnumerate:
    def test_one_square(self):
        entries = enumerate_origamis(1)
        assert len(entries) == 1 and entries[0].stratum == "H(0)"

    def test_three_square_h2(self):
        entries = enumerate_origamis(3, stratum_filter="H(2)", reduced_only=True)
        assert len(entries) == 2 + 1  # the staircase orbit has three members
        assert len({e.orbit_id for e in entries}) == 1
        assert entries[0].index == 3 and entries[0].cusp_widths == (2, 1)

    def test_five_square_h2_has_two_orbits(self):
        entries = enumerate_origamis(5, stratum_filter="H(2)", reduced_only=True)
        sizes = sorted(
            len([e for e in entries if e.orbit_id == oid]) for oid in {e.orbit_id for e in entries}
        )
        assert sizes == [9, 18]

    def test_deterministic(self):
        a = enumerate_origamis(4, stratum_filter="H(1,1)")
        b = enumerate_origamis(4, stratum_filter="H(1,1)")
        assert [e.to_json() for e in a] == [e.to_json() for e in b]

    def test_partition_into_orbits(self):
        for n in (2, 3, 4, 5, 6):
            entries = enumerate_origamis(n, reduced_only=True)
            total = 0
            for oid in {e.orbit_id for e in entries}:
                members = [e for e in entries if e.orbit_id == oid]
                total += len(members)
                assert sum(members[0].cusp_widths) == members[0].index
            assert total == len(entries)

    def test_orbit_sizes_partition_where_rotation_by_pi_is_trivial(self):
        # in genus <= 2 the half-turn fixes every surface, so the projective
        # orbit sizes add up to the number of canonical forms; higher genus
        # surfaces (n >= 5) can be moved by it, and then a projective class
        # holds two canonical forms
        for n in (2, 3, 4):
            entries = enumerate_origamis(n, reduced_only=True)
            by_orbit = {}
            for e in entries:
                by_orbit.setdefault(e.orbit_id, e)
            assert sum(e.index for e in by_orbit.values()) == len(entries)
        h2 = enumerate_origamis(6, stratum_filter="H(2)", reduced_only=True)
        by_orbit = {}
        for e in h2:
            by_orbit.setdefault(e.orbit_id, e)
        assert sum(e.index for e in by_orbit.values()) == len(h2)

    def test_against_brute_force_count(self):
        # independent route: enumerate every (h, v) pair directly
        from itertools import permutations

        from origamis.catalog import _transitive_pair
        from origamis.origami import _canonical_key

        n = 4
        keys = set()
        for h in permutations(range(1, n + 1)):
            for v in permutations(range(1, n + 1)):
                if _transitive_pair(h, v):
                    keys.add(_canonical_key(h, v))
        assert len(keys) == len(canonical_origamis(n))

    def test_bounds(self):
        with pytest.raises(ValueError):
            enumerate_origamis(0)
        with pytest.raises(ValueError):
            enumerate_origamis(9)
        with pytest.raises(ValueError):
            enumerate_origamis(4, bound=3)


class TestCatalogFile:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        entries = enumerate_origamis(3, stratum_filter="H(2)")
        written, skipped = catalog_write(path, entries)
        assert (written, skipped) == (len(entries), 0)
        back = catalog_query(path, n=3)
        assert back == entries

    def test_idempotent_append(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        entries = enumerate_origamis(2)
        catalog_write(path, entries)
        with pytest.warns(UserWarning, match="duplicate"):
            written, skipped = catalog_write(path, entries)
        assert (written, skipped) == (0, len(entries))
        assert catalog_query(path) == entries

    def test_query_filters(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        catalog_write(path, enumerate_origamis(2) + enumerate_origamis(3))
        assert all(e.n == 3 for e in catalog_query(path, n=3))
        assert all(e.stratum == "H(2)" for e in catalog_query(path, stratum_filter="H(2)"))
        some = catalog_query(path, n=3)[0]
        assert all(
            e.orbit_id == some.orbit_id for e in catalog_query(path, orbit_id=some.orbit_id)
        )

    def test_query_empty(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        path.write_text("")
        assert catalog_query(path) == []

    def test_malformed_line_reports_number(self, tmp_path):
        path = tmp_path / "cat.jsonl"
        good = enumerate_origamis(1)[0].to_json()
        path.write_text(good + "\n{not json}\n")
        with pytest.raises(CatalogError, match="line 2"):
            catalog_query(path)


def run_cli(*argv):
    import io
    from contextlib import redirect_stderr, redirect_stdout

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


ST3 = "3; h=(1,2); v=(1,3)"


class TestCLI:
    def test_info(self):
        code, out, _ = run_cli("info", ST3)
        assert code == 0
        data = json.loads(out)
        assert data["genus"] == 2 and data["stratum"] == "H(2)" and data["reduced"] is True

    def test_orbit(self):
        code, out, _ = run_cli("orbit", ST3)
        data = json.loads(out)
        assert code == 0 and data["index"] == 3 and data["genus"] == 0
        assert data["cusps"] == [
            {"width": 2, "cylinders": 2},
            {"width": 1, "cylinders": 1},
        ]

    def test_cylinders(self):
        code, out, _ = run_cli("cylinders", ST3, "--dir", "1,1")
        data = json.loads(out)
        assert code == 0 and data == [{"width": 3, "height": 1, "length": "3*sqrt(2)"}]

    def test_flow(self):
        code, out, _ = run_cli("flow", ST3, "--dir", "0,1", "--start", "2:1/2:0")
        data = json.loads(out)
        assert code == 0 and data["periodic"] is True and data["length"] == "1"

    def test_flow_discrepancy(self):
        code, out, _ = run_cli(
            "flow", "discrepancy", "1; h=(); v=()", "--slope", "1.618", "--crossings", "2000"
        )
        assert code == 0
        assert 0 <= json.loads(out) <= 1

    def test_lshape(self):
        code, out, _ = run_cli("lshape", "--d", "5")
        data = json.loads(out)
        assert code == 0
        assert data["field"] == "Q[sqrt(5)]" and data["twist_powers"] == [4, 4]
        assert data["stratum"] == "H(2)"

    def test_lshape_shifted(self):
        code, out, _ = run_cli("lshape", "--d", "5", "--shift", "1/3")
        data = json.loads(out)
        assert code == 0 and data["stratum"] == "H(1,1)"

    def test_strata_dim(self):
        assert json.loads(run_cli("strata-dim", "--abelian", "2")[1]) == 4
        assert json.loads(run_cli("strata-dim", "--abelian", "1,1")[1]) == 5
        assert json.loads(run_cli("strata-dim", "--abelian", "0")[1]) == 2
        assert json.loads(run_cli("strata-dim", "--quadratic", "1,1,1,1")[1]) == 6

    def test_enumerate(self):
        code, out, _ = run_cli("enumerate", "--n", "3", "--stratum", "H(2)", "--reduced")
        data = json.loads(out)
        assert code == 0 and len(data) == 3
        assert len({e["orbit_id"] for e in data}) == 1

    def test_catalog_roundtrip(self, tmp_path):
        path = str(tmp_path / "c.jsonl")
        code, out, _ = run_cli("catalog", "write", "--path", path, "--n", "3", "--stratum", "H(2)")
        assert code == 0 and json.loads(out)["written"] == 3
        code, out, _ = run_cli("catalog", "query", "--path", path, "--stratum", "H(2)")
        assert code == 0 and len(json.loads(out)) == 3

    def test_outputs_reparse(self):
        for argv in (
            ("info", ST3),
            ("orbit", ST3),
            ("cylinders", ST3, "--dir", "1,2"),
            ("lshape", "--d", "2"),
            ("strata-dim", "--abelian", "2"),
        ):
            code, out, _ = run_cli(*argv)
            assert code == 0
            json.loads(out)

    def test_input_error_exit_code(self):
        code, _, err = run_cli("info", "3; h=(1,2); v=(1,2)")  # disconnected
        assert code == 1 and "error" in err

    def test_unknown_subcommand(self):
        code, _, _ = run_cli("frobnicate")
        assert code == 1

    def test_console_script_entry(self):
        proc = subprocess.run(
            [sys.executable, "-m", "origamis", "info", ST3],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["stratum"] == "H(2)"
