import json

import pytest

from bmcircuits.cli import REPORT_FIELDS, run


def records(capsys):
    out = capsys.readouterr().out.strip()
    return [json.loads(line) for line in out.splitlines() if line]


class TestGen:
    def test_complete(self, tmp_path, capsys):
        out = tmp_path / "c4.bm"
        assert run(["gen", "--kind", "complete", "--n", "4", "--out", str(out)]) == 0
        (rec,) = records(capsys)
        assert rec["size"] == 15 and rec["verified"] is True

    def test_random_is_seed_stable(self, tmp_path, capsys):
        a = tmp_path / "a.bm"
        b = tmp_path / "b.bm"
        run(["gen", "--kind", "random", "--n", "8", "--size", "20",
             "--seed", "5", "--out", str(a)])
        run(["gen", "--kind", "random", "--n", "8", "--size", "20",
             "--seed", "5", "--out", str(b)])
        assert a.read_text() == b.read_text()

    def test_missing_args_usage_error(self, tmp_path, capsys):
        assert run(["gen", "--kind", "complete", "--out", str(tmp_path / "x.bm")]) == 1


class TestDecomposeVerify:
    @pytest.fixture()
    def instance(self, tmp_path):
        path = tmp_path / "m.bm"
        run(["gen", "--kind", "complete", "--n", "5", "--out", str(path)])
        return path

    def test_pipeline(self, instance, tmp_path, capsys):
        out = tmp_path / "m.bmdec"
        code = run(["decompose", "--in", str(instance), "--method", "auto",
                    "--eps", "0.5", "--out", str(out)])
        assert code == 0
        rec = records(capsys)[-1]
        assert rec["verified"] is True
        assert rec["branch"] in ("dense", "sparse", "trivial")
        assert rec["circuits"] >= rec["quotient_bound"]
        assert run(["verify", "--in", str(instance), "--against", str(out),
                    "--mode", "decomposition"]) == 0

    def test_all_methods(self, instance, tmp_path, capsys):
        for method in ("auto", "log", "peel"):
            out = tmp_path / f"{method}.bmdec"
            assert run(["decompose", "--in", str(instance), "--method", method,
                        "--out", str(out)]) == 0

    def test_verify_detects_tampering(self, instance, tmp_path, capsys):
        out = tmp_path / "m.bmdec"
        run(["decompose", "--in", str(instance), "--out", str(out)])
        lines = out.read_text().splitlines()
        # drop one vector line from the first block
        victim = next(i for i, l in enumerate(lines)
                      if l and not l.startswith(("circuits", "dim", "#")))
        tampered = lines[:victim] + lines[victim + 1:]
        out.write_text("\n".join(tampered) + "\n")
        assert run(["verify", "--in", str(instance), "--against", str(out),
                    "--mode", "decomposition"]) == 2

    def test_malformed_input_exit1(self, tmp_path, capsys):
        bad = tmp_path / "bad.bm"
        bad.write_text("dim 3\n11\n")
        assert run(["decompose", "--in", str(bad), "--out",
                    str(tmp_path / "x.bmdec")]) == 1

    def test_dense_on_sparse_input_exit1(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "copies", "--k", "5", "--s", "2", "--out", str(m)])
        assert run(["decompose", "--in", str(m), "--method", "dense",
                    "--out", str(tmp_path / "x.bmdec")]) == 1


class TestOddcoverArboricity:
    def test_oddcover(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "copies", "--k", "2", "--s", "3", "--out", str(m)])
        out = tmp_path / "m.cover"
        assert run(["oddcover", "--in", str(m), "--out", str(out)]) == 0
        rec = records(capsys)[-1]
        assert rec["verified"] is True and rec["arboricity"] == 3
        assert run(["verify", "--in", str(m), "--against", str(out),
                    "--mode", "oddcover"]) == 0

    def test_arboricity(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "complete", "--n", "3", "--out", str(m)])
        out = tmp_path / "m.part"
        assert run(["arboricity", "--in", str(m), "--out", str(out)]) == 0
        rec = records(capsys)[-1]
        assert rec["arboricity"] == 3
        assert run(["verify", "--in", str(m), "--against", str(out),
                    "--mode", "partition"]) == 0


class TestOrbit:
    def test_p5(self, tmp_path, capsys):
        out = tmp_path / "p5.bmdec"
        assert run(["orbit", "--p", "5", "--out", str(out)]) == 0
        rec = records(capsys)[-1]
        assert rec["circuits"] == 3 and rec["verified"] is True

    def test_p7_exit1_with_order_in_message(self, tmp_path, capsys):
        code = run(["orbit", "--p", "7", "--out", str(tmp_path / "x.bmdec")])
        err = capsys.readouterr().err
        assert code == 1
        assert "3" in err

    def test_demo(self, capsys):
        assert run(["orbit", "--demo-p7"]) == 0
        rec = records(capsys)[-1]
        assert rec["order"] == 3 and rec["verified"] is True

    def test_compress(self, tmp_path, capsys):
        out = tmp_path / "p5c.bmdec"
        assert run(["orbit", "--p", "5", "--compress", "--out", str(out)]) == 0
        assert "dim 4" in out.read_text()


class TestOracleCli:
    def test_conjectures(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "complete", "--n", "4", "--out", str(m)])
        assert run(["oracle", "--in", str(m), "--what", "conjectures"]) == 0
        rec = records(capsys)[-1]
        assert rec["c"] == 3 and rec["conj1"] == "CONSISTENT"

    def test_circuit_count(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "complete", "--n", "3", "--out", str(m)])
        assert run(["oracle", "--in", str(m), "--what", "circuits"]) == 0
        assert records(capsys)[-1]["circuits"] == 14


class TestSchemaStability:
    def test_same_keys_everywhere(self, tmp_path, capsys):
        m = tmp_path / "m.bm"
        run(["gen", "--kind", "complete", "--n", "3", "--out", str(m)])
        run(["decompose", "--in", str(m), "--out", str(tmp_path / "d.bmdec")])
        run(["oracle", "--in", str(m), "--what", "c"])
        run(["orbit", "--demo-p7"])
        for rec in records(capsys):
            assert tuple(rec.keys()) == REPORT_FIELDS

    def test_unknown_subcommand_exit1(self, capsys):
        assert run(["frobnicate"]) == 1


class TestBench:
    def test_quick_suite(self, capsys):
        assert run(["bench", "--seed", "0"]) == 0
        recs = records(capsys)
        assert len(recs) >= 5
        assert all(r["verified"] for r in recs)
