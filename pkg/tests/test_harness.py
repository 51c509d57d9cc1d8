import pytest

from recwb import harness
from recwb.algebra import const_program, psi
from recwb.certify import CertificateError
from recwb.harness import (
    certify_chain,
    example2_enumerators,
    run_example1,
    run_example2,
    theorem5_witness,
    verify_diagonal,
    verify_escape,
)
from recwb.qproc import Session

FUEL = 10**6


@pytest.fixture(scope="module")
def chain3():
    return example2_enumerators(3)


def session_with_chain(chain):
    s = Session()
    certify_chain(s, chain)
    return s


def test_verify_diagonal_const_enumerator(chain3):
    s = session_with_chain(chain3)
    report = verify_diagonal(s, chain3[0], 25, FUEL)
    assert report.verdict
    assert report.inconclusive_count == 0
    assert all(line.status == "pass" for line in report.lines)


def test_verify_diagonal_level2(chain3):
    s = session_with_chain(chain3)
    report = verify_diagonal(s, chain3[1], 10, FUEL)
    assert report.verdict and report.inconclusive_count == 0


def test_verify_diagonal_fuel_one_all_inconclusive(chain3):
    s = session_with_chain(chain3)
    report = verify_diagonal(s, chain3[0], 5, 1)
    assert not report.verdict
    assert report.inconclusive_count == 6
    assert all(line.status == "inconclusive" for line in report.lines)


def test_verify_diagonal_rejects_uncertified():
    s = Session()
    with pytest.raises(CertificateError):
        verify_diagonal(s, const_program(0), 5, FUEL)


def test_verify_escape(chain3):
    s = session_with_chain(chain3)
    for j in chain3[:2]:
        report = verify_escape(s, j, 100, FUEL)
        assert report.verdict and report.inconclusive_count == 0


def test_reports_are_reproducible(chain3):
    s = session_with_chain(chain3)
    a = verify_diagonal(s, chain3[0], 10, FUEL)
    b = verify_diagonal(s, chain3[0], 10, FUEL)
    assert a.text() == b.text()
    assert a.to_dict() == b.to_dict()


def test_report_text_format_golden(chain3):
    s = session_with_chain(chain3)
    report = verify_diagonal(s, chain3[0], 1, FUEL)
    assert report.text() == (
        "check=diagonal j=7 verdict=true inconclusive=0\n"
        "n=0 pass diagonal value is inner value plus 1\n"
        "n=1 pass diagonal value is inner value plus 1"
    )


def test_run_example1_transcript():
    t = run_example1()
    s = t.session
    assert s.alpha[1] == 0 and s.alpha[5] == 0
    assert s.alpha[0] == psi(const_program(0))
    assert len(s.alpha_entries) == 3
    assert "query 1 -> 0" in t.steps[0]


def test_run_example2_k1_reduces_to_single_feed():
    t = run_example2(1)
    s = t.session
    assert len(s.alpha_entries) == 1
    assert s.alpha[0] == psi(const_program(0))


def test_run_example2_k3_chain(chain3):
    t = run_example2(3)
    s = t.session
    for m in range(1, 4):
        assert s.alpha[m - 1] == psi(chain3[m - 1])
    assert any("shift law holds at level 3" in step for step in t.steps)


def test_run_example2_rejects_large_k():
    with pytest.raises(ValueError):
        run_example2(9)
    with pytest.raises(ValueError):
        run_example2(0)


def test_theorem5_witness_const_enumerator(chain3):
    s = session_with_chain(chain3)
    report = theorem5_witness(s, chain3[0], 25, FUEL)
    assert report.verdict
    assert report.inconclusive_count == 0
    assert report.fed_slot == 0
    assert report.omega_at_slot == psi(chain3[0])
    assert psi(chain3[0]) not in [v for _, v in report.sampled_range]


def test_theorem5_witness_single_point(chain3):
    s = session_with_chain(chain3)
    report = theorem5_witness(s, chain3[0], 0, FUEL)
    assert report.verdict
    assert len(report.escape_checks) == 1


def test_theorem5_witness_level3(chain3):
    s = session_with_chain(chain3)
    report = theorem5_witness(s, chain3[2], 10, FUEL)
    assert report.verdict and report.inconclusive_count == 0


def test_no_pass_claimed_on_fuel_exhaustion(chain3):
    s = session_with_chain(chain3)
    report = verify_escape(s, chain3[0], 10, 0)
    assert not report.verdict
    assert all(line.status == "inconclusive" for line in report.lines)


def test_replay_determinism_of_example_sessions():
    for t in (run_example1(), run_example2(2)):
        replayed = Session.replay_records(t.session.log)
        assert replayed.alpha_entries == t.session.alpha_entries
