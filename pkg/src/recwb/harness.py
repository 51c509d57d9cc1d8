"""Executable finite-prefix checks and worked scenarios.

Every check quantifies over n <= N, never over all n, and a fuel-exhausted
point is reported as inconclusive — an inconclusive is never a pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import build_psi, const_program, prepend_program, prepend_value, psi
from .lang import FUEL_EXHAUSTED, interpret
from .numbering import decode_program, index_str
from .qproc import Session

DEFAULT_N = 25
DEFAULT_FUEL = 10**6

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def run_index(i: int, n: int, fuel: int, program=None):
    """Value of the function at index i on input n, or None if out of fuel.

    When the caller already holds the program whose encoding is i (e.g. it
    built the program and encoded it itself), passing it avoids re-decoding
    the index; decode is the inverse of encode, so the result is the same.
    """
    if program is None:
        program = decode_program(i)
    out = interpret(program, n, fuel)
    if out is FUEL_EXHAUSTED:
        return None
    return out.value


@dataclass
class CheckLine:
    n: int
    status: str  # pass | fail | inconclusive
    detail: str = ""

    def text(self) -> str:
        return f"n={self.n} {self.status}" + (f" {self.detail}" if self.detail else "")


@dataclass
class CheckReport:
    name: str
    enumerator: int
    lines: list[CheckLine] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(line.status == PASS for line in self.lines)

    @property
    def inconclusive_count(self) -> int:
        return sum(1 for line in self.lines if line.status == INCONCLUSIVE)

    def text(self) -> str:
        head = (f"check={self.name} j={index_str(self.enumerator)} "
                f"verdict={'true' if self.verdict else 'false'} "
                f"inconclusive={self.inconclusive_count}")
        return "\n".join([head, *(line.text() for line in self.lines)])

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "enumerator": index_str(self.enumerator),
            "verdict": self.verdict,
            "inconclusive": self.inconclusive_count,
            "lines": [{"n": line.n, "status": line.status, "detail": line.detail}
                      for line in self.lines],
        }


def _require_enumerator(session: Session, j: int) -> None:
    from .certify import CertificateError

    if not session.registry.is_certified_enumerator(j):
        raise CertificateError(
            f"gate violation: {index_str(j)[:32]} holds no enumerator certificate")


def verify_diagonal(session: Session, j: int, N: int = DEFAULT_N,
                    fuel: int = DEFAULT_FUEL) -> CheckReport:
    """For n = 0..N check value(psi(j), n) == value(value(j, n), n) + 1."""
    _require_enumerator(session, j)
    p = psi(j)
    report = CheckReport("diagonal", j)
    for n in range(N + 1):
        m = run_index(j, n, fuel)
        if m is None:
            report.lines.append(CheckLine(n, INCONCLUSIVE, "enumerator ran out of fuel"))
            continue
        inner = run_index(m, n, fuel)
        if inner is None:
            report.lines.append(CheckLine(n, INCONCLUSIVE, "enumerated index ran out of fuel"))
            continue
        diag = run_index(p, n, fuel)
        if diag is None:
            report.lines.append(CheckLine(n, INCONCLUSIVE, "diagonal program ran out of fuel"))
            continue
        if diag == inner + 1:
            report.lines.append(CheckLine(n, PASS, "diagonal value is inner value plus 1"))
        else:
            report.lines.append(CheckLine(
                n, FAIL,
                f"expected inner+1, got {index_str(diag)[:32]} vs {index_str(inner)[:32]}"))
    return report


def verify_escape(session: Session, j: int, N: int = 100,
                  fuel: int = DEFAULT_FUEL) -> CheckReport:
    """Check psi(j) differs from value(j, n) for every n <= N."""
    _require_enumerator(session, j)
    p = psi(j)
    report = CheckReport("escape", j)
    for n in range(N + 1):
        m = run_index(j, n, fuel)
        if m is None:
            report.lines.append(CheckLine(n, INCONCLUSIVE, "enumerator ran out of fuel"))
        elif m != p:
            report.lines.append(CheckLine(n, PASS, "enumerated index differs from diagonal index"))
        else:
            report.lines.append(CheckLine(n, FAIL, "diagonal index appears in the sampled range"))
    return report


@dataclass
class Transcript:
    steps: list[str] = field(default_factory=list)
    session: Session | None = None

    def say(self, line: str) -> None:
        self.steps.append(line)

    def text(self) -> str:
        return "\n".join(self.steps)


def run_example1() -> Transcript:
    """Fresh store: two cold queries memoize the constant, then one feed
    lands the diagonal index in the least unused slot (slot 0 here)."""
    t = Transcript()
    s = Session()
    t.session = s
    v1 = s.q_query(1)
    t.say(f"query 1 -> {index_str(v1)}")
    assert v1 == s.c, (v1, s.c)
    v5 = s.q_query(5)
    t.say(f"query 5 -> {index_str(v5)}")
    assert v5 == s.c, (v5, s.c)
    j1 = const_program(0)
    s.issue_enum(j1, ("const", 0))
    r = s.q_feed(j1)
    t.say(f"feed {index_str(j1)} -> {index_str(r)}")
    assert r == 1, r
    slot = 0  # least unused after slots 1 and 5 were taken
    got = s.q_query(slot)
    expected = psi(j1)
    t.say(f"query {slot} -> psi({index_str(j1)})")
    if got != expected:
        raise AssertionError(f"slot {slot}: got {index_str(got)[:32]}, "
                             f"expected {index_str(expected)[:32]}")
    assert len(s.alpha_entries) == 3
    t.say("store size 3")
    return t


def run_example2(k: int, fuel: int = DEFAULT_FUEL, shift_points: int = 5) -> Transcript:
    """Build the self-feeding enumerator chain to depth k and feed each level.

    Level 1 is the constant enumerator; level m prepends the previous level's
    diagonal index. Asserts store slot m-1 holds the level-m diagonal index,
    and spot-checks the shift law at x <= shift_points per level.
    """
    if not 1 <= k <= 8:
        raise ValueError("k must be in 1..8 (index growth)")
    t = Transcript()
    s = Session()
    t.session = s
    chain = [None, const_program(0)]  # chain[m] = j_m
    programs = [None, decode_program(chain[1])]  # programs[m] encodes to chain[m]
    s.issue_enum(chain[1], ("const", 0))
    s.q_feed(chain[1])
    t.say(f"feed level 1 -> slot 0")
    for m in range(2, k + 1):
        prev = chain[m - 1]
        head = psi(prev)  # total-certified by the previous feed
        jm = prepend_value(prev, head)
        s.issue_enum(jm, ("prepend", prev, head))
        chain.append(jm)
        programs.append(prepend_program(prev, head))
        s.q_feed(jm)
        t.say(f"feed level {m} -> slot {m - 1}")
    for m in range(1, k + 1):
        slot = m - 1
        got = s.q_query(slot)
        expected = psi(chain[m])
        if got != expected:
            raise AssertionError(
                f"level {m}: store slot {slot} differs from the level-{m} diagonal index")
        t.say(f"omega({slot}) = psi(j_{m})")
    # Indices past ~100M bits are too big to re-decode on a time budget; the
    # shift check then runs the program built above, which encodes to jm
    # (decode/encode bijectivity is checked separately).
    decode_bit_limit = 10**8
    for m in range(2, k + 1):
        jm, prev = chain[m], chain[m - 1]
        known_jm = programs[m] if jm.bit_length() > decode_bit_limit else None
        known_prev = programs[m - 1] if prev.bit_length() > decode_bit_limit else None
        g0 = run_index(jm, 0, fuel, program=known_jm)
        if g0 != psi(prev):
            raise AssertionError(f"level {m}, x=0: first point is not the previous diagonal index")
        for x in range(1, shift_points + 1):
            new = run_index(jm, x, fuel, program=known_jm)
            old = run_index(prev, x - 1, fuel, program=known_prev)
            if new is None or old is None or new != old:
                raise AssertionError(f"level {m}, x={x}: shift law failed")
        t.say(f"shift law holds at level {m} for x <= {shift_points}")
    return t


@dataclass
class ContradictionReport:
    enumerator: int
    fed_slot: int
    omega_at_slot: int  # = psi(j)
    sampled_range: list  # (n, value(j, n) or None)
    diagonal_checks: list[CheckLine]
    escape_checks: list[CheckLine]

    @property
    def verdict(self) -> bool:
        return (all(c.status == PASS for c in self.diagonal_checks)
                and all(c.status == PASS for c in self.escape_checks))

    @property
    def inconclusive_count(self) -> int:
        return (sum(1 for c in self.diagonal_checks if c.status == INCONCLUSIVE)
                + sum(1 for c in self.escape_checks if c.status == INCONCLUSIVE))

    def text(self) -> str:
        lines = [
            f"check=thm5 j={index_str(self.enumerator)} slot={self.fed_slot} "
            f"verdict={'true' if self.verdict else 'false'} "
            f"inconclusive={self.inconclusive_count}",
            f"omega(slot) = psi(j) = {index_str(self.omega_at_slot)}",
        ]
        lines.extend(f"diagonal {c.text()}" for c in self.diagonal_checks)
        lines.extend(f"escape {c.text()}" for c in self.escape_checks)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "check": "thm5",
            "enumerator": index_str(self.enumerator),
            "fed_slot": self.fed_slot,
            "omega_at_slot": index_str(self.omega_at_slot),
            "verdict": self.verdict,
            "inconclusive": self.inconclusive_count,
            "diagonal": [{"n": c.n, "status": c.status, "detail": c.detail}
                         for c in self.diagonal_checks],
            "escape": [{"n": c.n, "status": c.status, "detail": c.detail}
                       for c in self.escape_checks],
        }


def theorem5_witness(session: Session, j: int, N: int = DEFAULT_N,
                     fuel: int = DEFAULT_FUEL) -> ContradictionReport:
    """Feed j, then exhibit the finite-prefix contradiction: the store's new
    slot holds psi(j), psi(j) escapes the sampled range of the function at j,
    and the diagonal plus-1 law holds at every sampled point."""
    _require_enumerator(session, j)
    slot = session.least_unused()
    session.q_feed(j)
    omega_at_slot = session.q_query(slot)
    p = psi(j)
    assert omega_at_slot == p
    diag = verify_diagonal(session, j, N, fuel)
    sampled = []
    escape_checks = []
    for n in range(N + 1):
        m = run_index(j, n, fuel)
        sampled.append((n, m))
        if m is None:
            escape_checks.append(CheckLine(n, INCONCLUSIVE, "enumerator ran out of fuel"))
        elif m != p:
            escape_checks.append(CheckLine(n, PASS, "enumerated index differs from diagonal index"))
        else:
            escape_checks.append(CheckLine(n, FAIL, "diagonal index appears in the sampled range"))
    return ContradictionReport(j, slot, omega_at_slot, sampled, diag.lines, escape_checks)


def example2_enumerators(depth: int) -> list:
    """The chain j_1..j_depth used by the verification suites."""
    chain = [const_program(0)]
    for _ in range(depth - 1):
        prev = chain[-1]
        chain.append(prepend_value(prev, psi(prev)))
    return chain


def certify_chain(session: Session, chain: list) -> None:
    """Issue the enumerator certificates for an example-2 chain, in order."""
    session.issue_enum(chain[0], ("const", 0))
    for prev, jm in zip(chain, chain[1:]):
        head = psi(prev)
        session.issue_total(head, ("psi", prev))  # logged, so the registry replays
        session.issue_enum(jm, ("prepend", prev, head))
