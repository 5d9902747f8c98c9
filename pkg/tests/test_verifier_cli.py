import json

import pytest

from affmod import GREVLEX, Ideal, ideals_equal, ring
from affmod.cli import FIELD_ENV_VAR, run
from affmod.report import VerificationReport, summarize
from affmod.rings import build_C2, c1_alternate_ideal, c1_to_c2_map
from affmod.scalars import PrimeField
from affmod.verifier import (
    cmd_degree_probe,
    cmd_fibers,
    cmd_localization,
    cmd_main_identities,
    cmd_samuel,
    cmd_takanori,
    cmd_takanori_repaired,
    run_all,
)


class TestVerifierCommands:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_fibers(self, n):
        rep = cmd_fibers(n)
        assert rep.status == "verified"
        assert rep.claim_id == f"fibers-n{n}"
        assert len(rep.transcript) == 15  # 3 generators x 5 default parameters

    def test_fibers_prime_field(self):
        rep = cmd_fibers(2, field=PrimeField(101))
        assert rep.status == "verified"

    def test_isomorphism_chain_literal_fails(self):
        rep = cmd_takanori()
        assert rep.status == "failed"
        joined = "\n".join(rep.transcript)
        assert "I = J as ideals: False" in joined
        assert "u = v = -1" in joined
        assert "1 + u*x = y modulo J: False" in joined
        assert "V = 1 - Y*U in C2 (so C2 is generated by X, Y, U): False" in joined
        # the one sub-claim that does hold literally
        assert "defining relations of C2: True" in joined

    def test_isomorphism_chain_repaired_verifies(self):
        rep = cmd_takanori_repaired()
        assert rep.status == "verified"
        joined = "\n".join(rep.transcript)
        assert "phi(I) = I2 as ideals: True" in joined
        assert "n=1 relation" in joined

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_samuel(self, n):
        rep = cmd_samuel(n)
        assert rep.status == "verified"
        assert "center point (1, 1)" in rep.detail

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_localization(self, n):
        assert cmd_localization(n).status == "verified"

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_main_identities(self, n):
        rep = cmd_main_identities(n)
        assert rep.status == "verified"
        assert any("(0, 0, 0)" in line for line in rep.transcript)

    def test_main_identities_n1_is_unknown(self):
        rep = cmd_main_identities(1)
        assert rep.status == "unknown"
        assert "n=1" in rep.detail

    def test_degree_probe(self):
        rep = cmd_degree_probe(n_max=3, box=3)
        assert rep.status == "verified"
        assert len(rep.payload) == 3 * (7 * 7 - 1)

    def test_degree_probe_restricted_set_fails(self):
        rep = cmd_degree_probe(n_max=2, box=2, names=("x", "y", "u"))
        assert rep.status == "failed"
        assert any("n=1" in line for line in rep.transcript)

    def test_run_all_composition(self):
        reports = run_all(n_values=(1, 2))
        ids = [r.claim_id for r in reports]
        assert ids == sorted(ids)
        assert "isomorphism-chain" in ids and "isomorphism-chain-repaired" in ids
        failed = [r.claim_id for r in reports if r.status == "failed"]
        # the literal chain is the single known-false claim
        assert failed == ["isomorphism-chain"]


class TestMutatedFixtures:
    def test_sign_flipped_alternate_generator_changes_ideal(self):
        amb = c1_alternate_ideal().ring
        x, y, u, v = amb.gens()
        good = c1_alternate_ideal()
        bad = Ideal([x * (u * v - 1) - (v + 1), y * (u * v - 1) + (u + 1)], GREVLEX)
        assert not ideals_equal(good, bad)

    def test_unnegated_image_misses_c2_generators(self):
        m = c1_to_c2_map()
        amb = m.target.ambient
        images = {**m.images, "u": amb.var("Y")}
        J = c1_alternate_ideal()
        mapped = [
            g.substitute({k: images[k] for k in m.images}, target=amb)
            for g in J.generators
        ]
        c2 = build_C2()
        assert not ideals_equal(Ideal(mapped, GREVLEX), Ideal(list(c2.defining.generators), GREVLEX))

    def test_wrong_sign_denominator_breaks_localization_identity(self):
        base = ring("x", "y")
        x, y = base.gens()
        t_wrong = x**2 * y + 1
        assert not (y * x**2 - (t_wrong + 1)).is_zero


class TestReportPlumbing:
    def test_report_json_schema(self):
        rep = cmd_samuel(2)
        d = json.loads(rep.to_json())
        assert set(d) == {"claim_id", "description", "status", "detail", "transcript", "seconds"}
        assert isinstance(d["transcript"], list)

    def test_payload_serializes(self):
        rep = cmd_degree_probe(n_max=1, box=1)
        d = json.loads(rep.to_json())
        assert "payload" in d and len(d["payload"]) == 8

    def test_summarize_tags(self):
        reports = [
            VerificationReport("a", "first", "verified"),
            VerificationReport("b", "second", "failed", detail="boom"),
            VerificationReport("c", "third", "unknown"),
        ]
        text = summarize(reports)
        assert "[PASS] a" in text and "[FAIL] b" in text and "[????] c" in text
        assert "3 checks: 1 verified, 1 failed, 1 unknown" in text

    def test_ok_property(self):
        assert VerificationReport("x", "", "unknown").ok
        assert not VerificationReport("x", "", "failed").ok


class TestCli:
    def test_exit_codes(self):
        assert run(["samuel", "--n", "2", "--quiet"]) == 0
        assert run(["localization", "--n", "3", "--quiet"]) == 0
        # the takanori subcommand includes the honest literal failure
        assert run(["takanori", "--quiet"]) == 1

    def test_fibers_with_lambdas(self, capsys):
        assert run(["fibers", "--n", "2", "--lambda", "1/2", "--lambda", "3"]) == 0
        out = capsys.readouterr().out
        assert "[PASS] fibers-n2" in out

    def test_quiet_suppresses_summary(self, capsys):
        run(["samuel", "--quiet"])
        assert capsys.readouterr().out == ""

    def test_json_output(self, tmp_path):
        path = tmp_path / "report.jsonl"
        assert run(["degree-probe", "--n", "1", "--box", "1", "--quiet", "--json", str(path)]) == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["claim_id"] == "degree-probe"

    def test_field_flag(self):
        assert run(["samuel", "--n", "1", "--field", "fp:101", "--quiet"]) == 0

    def test_bad_field_spec(self):
        with pytest.raises(ValueError):
            run(["samuel", "--field", "fp:4", "--quiet"])

    def test_field_env_default(self, monkeypatch):
        monkeypatch.setenv(FIELD_ENV_VAR, "fp:101")
        assert run(["localization", "--n", "1", "--quiet"]) == 0

    def test_rejects_bad_lambda(self, capsys):
        with pytest.raises(SystemExit):
            run(["fibers", "--lambda", "pi", "--quiet"])
