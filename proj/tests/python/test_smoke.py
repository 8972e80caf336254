import json
import os

import pytest

import framecert

TRIPLE = json.dumps({
    "dim": 2,
    "field": "real",
    "mode": "exact",
    "vectors": [[1, 0], [0, 1], [1, 1]],
})

ONB = json.dumps({
    "dim": 2,
    "field": "real",
    "mode": "exact",
    "vectors": [[1, 0], [0, 1]],
})


def test_version():
    assert framecert.version() == "0.1.0"


def test_input_digest_is_stable():
    assert framecert.input_digest("abc") == "fnv1a:e71fa2190541574b"
    assert framecert.input_digest("") == "fnv1a:cbf29ce484222325"


def test_certify_phase():
    verdict = json.loads(framecert.certify(TRIPLE, "phase"))
    assert verdict["outcome"] == "yes"

    refuted = json.loads(framecert.certify(ONB, "phase"))
    assert refuted["outcome"] == "no"
    assert "pair" in refuted


def test_certify_weak_phase_and_spark():
    assert json.loads(framecert.certify(ONB, "weak-phase"))["outcome"] == "no"
    # three vectors in the plane: the whole family is the smallest dependence
    spark = json.loads(framecert.spark(TRIPLE))
    assert spark["spark"] == 3
    assert spark["witness"] == [1, 2, 3]
    # a basis has no dependent subfamily: sentinel m + 1
    basis = json.loads(framecert.spark(ONB))
    assert basis["spark"] == 3
    assert basis["independent_family"] is True
    assert basis["witness"] == []


def test_canonical_dual_and_frame_operator():
    dual = json.loads(framecert.canonical_dual(TRIPLE))
    assert dual == [["2/3", "-1/3"], ["-1/3", "2/3"], ["1/3", "1/3"]]
    op = json.loads(framecert.frame_operator(TRIPLE))
    assert op == [["2", "1"], ["1", "2"]]


def test_measure_recover_round_trip():
    mags = framecert.measure(TRIPLE, json.dumps(["1/2", "-1/3"]))
    assert json.loads(mags)["squared"] == ["1/4", "1/9", "1/36"]
    result = json.loads(framecert.recover(TRIPLE, mags))
    assert result["status"] == "unique-up-to-sign"
    assert len(result["candidates"]) == 1
    coeffs = result["candidates"][0]["terms"][0]["coeffs"]
    assert coeffs in (["1/2", "-1/3"], ["-1/2", "1/3"])


def test_sampling_is_deterministic():
    a = framecert.sample_pr_duals(TRIPLE, count=64, seed=12345)
    b = framecert.sample_pr_duals(TRIPLE, count=64, seed=12345)
    assert a == b
    stats = json.loads(a)
    assert stats["samples"] == 64
    assert stats["pr"] == 64
    assert stats["seed"] == "12345"


def test_failure_variety_lines():
    variety = json.loads(framecert.failure_variety(TRIPLE))
    assert variety["distinct_planes"] == 3
    equations = {p["equation"] for p in variety["planes"]}
    assert equations == {"x1 + x2 + 1/3 = 0", "x1 - 1/3 = 0", "x2 - 1/3 = 0"}


def test_errors_surface_as_exceptions():
    with pytest.raises(framecert.FramecertError):
        framecert.certify("not json", "phase")
    with pytest.raises(framecert.FramecertError):
        framecert.certify(TRIPLE, "no-such-property")
    with pytest.raises(framecert.FramecertError):
        framecert.recover(ONB, json.dumps({"squared": ["1"]}))


def test_corpus_files_load_when_available():
    corpus = os.environ.get("FRAMECERT_CORPUS")
    if not corpus:
        pytest.skip("corpus directory not provided")
    names = sorted(f for f in os.listdir(corpus) if f.endswith(".json"))
    assert len(names) >= 10
    for name in names:
        with open(os.path.join(corpus, name)) as fh:
            text = fh.read()
        framecert.frame_operator(text)  # parses and validates every file
