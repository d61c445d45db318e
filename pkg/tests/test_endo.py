# tests/test_endo.py
from __future__ import annotations

from fractions import Fraction

import pytest

from core.algebra import CI, CL, CLI, I, L, element
from core.errors import CalibrationFailed, InducedAlgebraUnavailable, InvalidParameters
from core.scalar import Scalar, as_scalar
from params import ENDO_TUPLES, tuple_id
from services.endo import (
    DeltaCorrections,
    EndoParams,
    apply_endo,
    audit_lemma28,
    audit_theorem22,
    calibrate_corrections,
    check_homomorphism,
    format_endo,
    image,
    invert_endo,
    lemma28_endo,
    printed_corrections,
)


def closed_form(p: EndoParams) -> DeltaCorrections:
    k, b, c, d = p.k, p.b, p.c, p.d
    return DeltaCorrections(
        p1=Scalar(k * k - 1) / (24 * k),
        p2=d - c * k,
        p3=Scalar(k) * (d * d - c * c) / 2,
        p4=b * (1 - k),
        p5=b * k * (d - c),
        p6=Scalar(k),
        p7=-24 * k * c,
        p8=-12 * k * c * c,
        p9=b * k,
        p10=b * k * c,
        p11=k * b * b,
    )


@pytest.fixture(params=ENDO_TUPLES, ids=tuple_id)
def endo(request) -> EndoParams:
    return EndoParams.make(*request.param)


def test_params_validation():
    with pytest.raises(InvalidParameters):
        EndoParams.make(k=0)
    with pytest.raises(InvalidParameters):
        EndoParams.make(k=1, a=0)
    with pytest.raises(InvalidParameters):
        EndoParams(Fraction(1, 2))  # type: ignore[arg-type]


def test_images_off_degree_zero():
    p = EndoParams.make(2, "2", "3", "1", "1/2")
    dc = calibrate_corrections(p)
    # φ(L_1) = (1/2)·2 L_2 + 2·(1 + 1/2) I_2
    assert image(p, dc, L(1)) == element((1, L(2)), (3, I(2)))
    # φ(I_-1) = (1/2)·3 I_-2
    assert image(p, dc, I(-1)) == element((Fraction(3, 2), I(-2)))


def test_calibration_matches_closed_form(endo):
    assert calibrate_corrections(endo, 4) == closed_form(endo)


def test_calibration_is_window_stable(endo):
    assert calibrate_corrections(endo, 4) == calibrate_corrections(endo, 8)


def test_calibrated_twist_is_a_homomorphism(endo):
    report = check_homomorphism(endo, calibrate_corrections(endo), 8)
    assert report.status == "pass", report.counterexamples


def test_calibration_needs_window_three():
    with pytest.raises(CalibrationFailed):
        calibrate_corrections(EndoParams.make(2), 2)


def test_virasoro_correction_for_k2():
    p = EndoParams.make(2)
    assert calibrate_corrections(p).p1 == Fraction(1, 16)
    assert printed_corrections(p).p1 == Fraction(-1, 16)


def test_printed_corrections_fail_homomorphism():
    p = EndoParams.make(2)
    report = check_homomorphism(p, printed_corrections(p), 4)
    assert report.status == "fail"
    assert report.counterexamples[0].point == {"x": "L1", "y": "L-1"}
    assert report.failures >= len(report.counterexamples)


def test_identity_endo_hom_passes():
    p = EndoParams.make(1)
    assert check_homomorphism(p, calibrate_corrections(p), 4).passed


def test_audit_theorem22_flags_p1_only():
    report = audit_theorem22(EndoParams.make(2, c=0, d=0), 4)
    assert [e.component for e in report.mismatches] == ["p1"]
    assert report.verdict == "mismatch"
    by_name = {e.component: e for e in report.entries}
    assert by_name["p1"].derived == "1/16"
    assert by_name["p1"].printed == "-1/16"
    statuses = {c.suite: c.status for c in report.checks}
    assert statuses == {"endo-hom:calibrated": "pass", "endo-hom:printed": "fail"}


def test_audit_theorem22_with_d():
    report = audit_theorem22(EndoParams.make(2, c=0, d=1), 4)
    assert {e.component for e in report.mismatches} == {"p1", "p3", "p5"}


def test_audit_theorem22_identity_is_clean():
    report = audit_theorem22(EndoParams.make(1), 4)
    assert report.verdict == "identical"
    assert len(report.entries) == 11


@pytest.mark.parametrize("d", ["1", "-1/2", "i"])
def test_lemma28_audit_flags_central_signs(d):
    report = audit_lemma28(d, 4)
    assert {e.component for e in report.mismatches} == {"p3", "p5"}
    assert report.checks[0].status == "pass"


def test_lemma28_audit_without_d_is_clean():
    assert audit_lemma28("0", 4).verdict == "identical"


def test_lemma28_endo_values():
    p, dc = lemma28_endo("1", 4)
    assert (p.k, p.c) == (1, 0)
    assert dc.p3 == Fraction(1, 2)
    assert dc.p5 == 1


@pytest.mark.parametrize("t", [(1, "2", "3", "1", "1/2"), (-1, "3+i", "1/2", "-1/2", "1")])
def test_invert_endo_round_trip(t):
    p = EndoParams.make(*t)
    dc = calibrate_corrections(p)
    x = element((2, L(3)), (as_scalar("1/3"), I(-2)), L(0), (5, I(0)), CL, (3, CLI), CI)
    assert invert_endo(p, dc, apply_endo(p, dc, x)) == x


def test_invert_endo_requires_k_unit_and_b_nonzero():
    p = EndoParams.make(2)
    with pytest.raises(InducedAlgebraUnavailable):
        invert_endo(p, calibrate_corrections(p), element(L(1)))
    q = EndoParams.make(1, b=0)
    with pytest.raises(InducedAlgebraUnavailable):
        invert_endo(q, calibrate_corrections(q), element(L(1)))


def test_format_endo_names_every_correction():
    p = EndoParams.make(2, 1, "1/2", 0, 0)
    out = format_endo(p, printed_corrections(p))
    assert out["k"] == 2
    assert out["b"] == "1/2"
    assert sorted(out["corrections"], key=lambda n: int(n[1:])) == [f"p{i}" for i in range(1, 12)]
    assert out["corrections"]["p6"] == "2"
