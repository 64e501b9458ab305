import json
from dataclasses import replace

import pytest

from qlegendre import registry as R
from qlegendre.exactalg import QPoly, QSeries
from qlegendre.qkit import euler_inverse, quintuple_product
from qlegendre.seeds import SEEDS

# every labelled display, in order of appearance
EQUATION_LABELS = [
    "eq:Binom_rec", "1.3", "T1.3", "cpi", "capid", "T1.6", "qpi", "T1.4", "1.4", "1.4a", "1.5",
    "1.6", "T1.1", "T1.5", "*", "1.7", "l", "T1.7", "**", "+", "++", "T1.8", "ms2", "T1.9", "r",
    "T1.10", "LS(124)", "T1.11", "SL(125)", "y", "z", "xy", "w",
]

EXPECTED_IDS = (
    ["JTP-POLY", "QBT", "JTP", "QPI", "EISEN3", "CHARSUM", "CAP-POLY", "CAP"]
    + [f"SEED-{x}" for x in "ABCDEFGHI"]
    + [f"CHAIN-{x}-POLY" for x in "ABCDEF"] + [f"CHAIN-{x}-LIM" for x in "ABCDEF"]
    + ["MS-PLUS", "MS-PLUSPLUS", "MS2", "RAMANUJAN", "SLATER-124", "SLATER-125", "LIM-G", "LIM-H", "LIM-I"]
)


def test_catalog_ids():
    assert list(R.CATALOG) == EXPECTED_IDS


def test_catalog_completeness():
    for label in EQUATION_LABELS:
        assert label in R.LABEL_COVERAGE or label in R.OUT_OF_SCOPE, label
    for rid in R.LABEL_COVERAGE.values():
        assert rid in R.CATALOG


def test_records_are_well_formed():
    for rec in R.CATALOG.values():
        assert rec.kind in ("polynomial", "series", "structural")
        assert rec.paper_ref and rec.display
        assert rec.grid(2, 1, 10)


def test_evaluate_examples():
    ev = R.evaluate_identity("SEED-A", {"L": 1})
    assert ev.equal and ev.lhs == QPoly([1, 0, 0, -1]) == ev.rhs
    ev = R.evaluate_identity("SEED-A", {"L": 0})
    assert ev.equal and ev.lhs.is_zero()
    ev = R.evaluate_identity("SEED-H", {"L": 0})
    assert ev.equal and ev.lhs == QPoly([0, 1])


def test_evaluate_errors():
    with pytest.raises(R.UnknownIdentity):
        R.evaluate_identity("NOPE", {})
    with pytest.raises(R.ParamsOutOfRange):
        R.evaluate_identity("SEED-A", {"L": -1})
    with pytest.raises(R.ParamsOutOfRange):
        R.evaluate_identity("CHAIN-A-POLY", {"L": 3})
    with pytest.raises(R.ParamsOutOfRange):
        R.evaluate_identity("CHAIN-A-POLY", {"L": 3, "v": 0})


def test_series_records_integral():
    ev = R.evaluate_identity("RAMANUJAN", {"order": 50})
    assert ev.equal and ev.lhs.is_integral() and len(ev.lhs.coeffs) == 51


def test_multipliers():
    m = R.Multiplier(QPoly([0, 1]), QPoly([1, 1]))
    s = m.apply(QSeries.from_poly(QPoly([1, 1]), 5))
    assert s == QSeries.from_poly(QPoly([0, 1]), 5)
    assert m.apply(QPoly([1, 2, 1])) == QPoly([0, 1, 1])


def test_first_mismatch_shapes():
    assert R.first_mismatch(QPoly([1, 2]), QPoly([1, 3])) == (1, 2, 3)
    assert R.first_mismatch((1, 2), (1, 2)) is None
    assert R.first_mismatch((1, 2), (1, 2, 3)) == (2, None, None)


def test_verify_small_run_passes():
    rep = R.verify_all(L_max=6, v_max=2, order=60)
    assert rep.passed, [r.as_dict() for r in rep.failures()][:3]


def test_verify_Lmax_zero():
    rep = R.verify_all(L_max=0, v_max=1, order=10)
    assert rep.passed
    seeds = {r.id for r in rep.results if r.id.startswith("SEED-")}
    assert len(seeds) == 9
    assert all(r.params["L"] == 0 for r in rep.results if r.id.startswith("SEED-"))


def test_verify_rejects_bad_config():
    with pytest.raises(ValueError):
        R.verify_all(L_max=-1)
    with pytest.raises(ValueError):
        R.verify_all(jobs=0)


def test_parallel_matches_serial():
    ids = ["SEED-C", "CHAIN-D-POLY", "LIM-H"]
    a = R.verify_all(L_max=5, v_max=2, order=40, ids=ids, jobs=1).as_dict()["results"]
    b = R.verify_all(L_max=5, v_max=2, order=40, ids=ids, jobs=3).as_dict()["results"]
    strip = lambda rows: [{k: v for k, v in r.items() if k != "millis"} for r in rows]
    assert strip(a) == strip(b)


def test_sign_error_in_seed_F_is_isolated():
    bad = SEEDS["SEED-F"].alpha
    catalog = R.build_catalog(R.mutated_seeds("SEED-F", replace(bad, sign=-bad.sign)))
    rep = R.verify_all(L_max=5, v_max=1, order=30, catalog=catalog)
    assert rep.failed_ids() == {"SEED-F"}


def test_derive_chain_notes():
    assert "agrees" in R.derive_chain("SEED-D", 2).provenance_note
    assert R.derive_chain("SEED-A", 2).provenance_note.startswith("engine form = q^2")
    assert R.derive_chain("SEED-F", 1).provenance_note.startswith("engine form = q^1")
    assert "normalized" in R.derive_chain("SEED-E", 1).provenance_note
    assert R.derive_chain("SEED-H", 1).provenance_note == "no printed hierarchy"
    with pytest.raises(R.UnknownSeed):
        R.derive_chain("SEED-Z", 1)
    with pytest.raises(ValueError):
        R.derive_chain("SEED-A", 0)


@pytest.mark.parametrize("sid", ["SEED-A", "SEED-G", "SEED-I"])
def test_derive_chain_holds(sid):
    rec = R.derive_chain(sid, 2)
    for L in range(7):
        assert R.first_mismatch(*rec.sides({"L": L})) is None


@pytest.mark.parametrize("sid,B,mult", [("SEED-D", 3, 0), ("SEED-E", 5, 0), ("SEED-F", 7, 1)])
def test_derived_limits_are_named_identities(sid, B, mult):
    N = 120
    rec = R.derive_chain_limit(sid, 1)
    lhs, rhs = rec.sides({"order": N})
    assert lhs == rhs
    named = (quintuple_product(18, 1, B, N) * euler_inverse(N, 2)).shift(mult)
    assert lhs == named


def test_catalog_json_export():
    data = R.catalog_json()
    json.dumps(data)
    assert len(data) == len(R.CATALOG)
    assert set(data[0]) == {"id", "kind", "paper_ref", "quote", "ranges", "provenance_note"}
    seed_c = next(d for d in data if d["id"] == "SEED-C")
    assert "introduction" in seed_c["provenance_note"]
