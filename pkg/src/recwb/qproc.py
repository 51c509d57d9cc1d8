"""The stateful memo procedure and its evolving store.

A session owns the append-only store alpha (a finite map natural -> index),
the certificate registry, and a replayable command log. One call = one
atomic mutation batch. The procedure's steps, in order:

  1. l := least natural not in dom(alpha)
  2. if j is set: append (l, diagonal-index-of-j) to alpha   [gated]
  3. if x is unset: return 1
  4. if x in dom(alpha): return alpha(x)
  5. append (x, c) and return alpha(x)

The constant c is the identity program's index, 0, fixed at build time and
recorded in the session header. Feeding j also issues the total certificate
for its diagonal index, so every value in alpha's range stays certified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .algebra import build_psi
from .certify import CertificateError, Registry
from .numbering import index_str, parse_index

FORMAT_VERSION = 1
CONSTANT_C = 0  # identity program


class SessionFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass
class LogRecord:
    verb: str  # FEED | QUERY | BOTH | CERT-TOTAL | CERT-ENUM
    operands: tuple
    returned: int | None = None

    def line(self) -> str:
        parts = [self.verb, *(index_str(o) if not isinstance(o, str) else o
                              for o in self.operands)]
        if self.returned is not None:
            parts.append(index_str(self.returned))
        return " ".join(parts)


@dataclass
class Session:
    c: int = CONSTANT_C
    alpha_entries: list = field(default_factory=list)  # append-only (x, y)
    alpha: dict = field(default_factory=dict)
    registry: Registry = field(default_factory=Registry)
    log: list[LogRecord] = field(default_factory=list)
    version: int = 0  # bumps once per accepted mutating command

    def __post_init__(self):
        # c must itself be certified total before anything enters the store
        self.registry.issue_total(self.c, ("syntactic",))

    # --- the procedure ----------------------------------------------------

    def least_unused(self) -> int:
        l = 0
        while l in self.alpha:
            l += 1
        return l

    def _append(self, x: int, y: int) -> None:
        if x in self.alpha:
            raise AssertionError("store is functional; duplicate slot")
        self.alpha_entries.append((x, y))
        self.alpha[x] = y

    def q_step(self, x: int | None = None, j: int | None = None) -> int:
        """One atomic run of the procedure. Rejects an uncertified j
        before any mutation."""
        if x is None and j is None:
            returned = self._q_raw(None, None)
            return returned
        if j is not None and not self.registry.is_certified_enumerator(j):
            raise CertificateError(
                f"gate violation: {index_str(j)[:32]} holds no enumerator certificate"
            )
        returned = self._q_raw(x, j)
        verb = "BOTH" if (x is not None and j is not None) else (
            "FEED" if j is not None else "QUERY")
        operands = tuple(o for o in (x, j) if o is not None)
        self.log.append(LogRecord(verb, operands, returned))
        self.version += 1
        return returned

    def _q_raw(self, x, j) -> int:
        l = self.least_unused()  # computed unconditionally, per step 1
        if j is not None:
            built = build_psi(j)
            self.registry.apply_rule_psi(j)  # total certificate for the new value
            self._append(l, built.index)
        if x is None:
            return 1
        if x in self.alpha:
            return self.alpha[x]
        self._append(x, self.c)
        return self.alpha[x]

    def q_query(self, x: int) -> int:
        """The memo function's value at x; total, may insert (x, c)."""
        return self.q_step(x=x)

    def q_feed(self, j: int) -> int:
        """Feed a certified enumerator; extends alpha by one diagonal value."""
        return self.q_step(j=j)

    def peek(self, x: int):
        """Read alpha without the insert-on-miss step. Not the memo function."""
        return self.alpha.get(x)

    # --- explicit certificate commands (logged so the registry replays) ---

    def issue_total(self, i: int, justification: tuple):
        cert = self.registry.issue_total(i, justification)
        self.log.append(LogRecord("CERT-TOTAL", (i, cert.kind, *cert.premises)))
        self.version += 1
        return cert

    def issue_enum(self, i: int, justification: tuple):
        cert = self.registry.issue_enum(i, justification)
        self.log.append(LogRecord("CERT-ENUM", (i, cert.kind, *cert.premises)))
        self.version += 1
        return cert

    # --- persistence -------------------------------------------------------

    def save(self, path) -> None:
        path = Path(path)
        lines = [f"session-log v{FORMAT_VERSION} c={index_str(self.c)}"]
        lines.extend(rec.line() for rec in self.log)
        lines.append(f"COUNT {len(self.log)}")
        path.write_text("\n".join(lines) + "\n")

    @classmethod
    def replay_records(cls, log: list[LogRecord]) -> "Session":
        """Re-execute a command log against an empty store, verifying each
        recorded return value. Serialization-free: giant operands stay mpz."""
        session = cls()
        for rec in log:
            if rec.verb == "CERT-TOTAL":
                session.issue_total(rec.operands[0], tuple(rec.operands[1:]))
            elif rec.verb == "CERT-ENUM":
                session.issue_enum(rec.operands[0], tuple(rec.operands[1:]))
            elif rec.verb == "FEED":
                got = session.q_feed(rec.operands[0])
                if got != rec.returned:
                    raise SessionFormatError("replay mismatch on FEED")
            elif rec.verb == "QUERY":
                got = session.q_query(rec.operands[0])
                if got != rec.returned:
                    raise SessionFormatError("replay mismatch on QUERY")
            elif rec.verb == "BOTH":
                got = session.q_step(x=rec.operands[0], j=rec.operands[1])
                if got != rec.returned:
                    raise SessionFormatError("replay mismatch on BOTH")
            else:
                raise SessionFormatError(f"unknown record {rec.verb!r}")
        return session

    @classmethod
    def load(cls, path) -> "Session":
        path = Path(path)
        text = path.read_text()
        return cls.replay(text, source=str(path))

    @classmethod
    def replay(cls, text: str, source: str = "<session>") -> "Session":
        """Rebuild a session from its log; verifies returned values and the
        record-count trailer, naming the last good line on failure."""
        lines = text.splitlines()
        if not lines:
            raise SessionFormatError("empty session file", 1)
        header = lines[0].split()
        if len(header) != 3 or header[0] != "session-log" or header[1] != f"v{FORMAT_VERSION}":
            raise SessionFormatError(f"bad header {lines[0]!r}", 1)
        c = parse_index(header[2].removeprefix("c="))
        if c != CONSTANT_C:
            raise SessionFormatError(f"unsupported constant c={index_str(c)}", 1)
        session = cls(c=int(c))
        count = None
        records = 0
        for lineno, raw in enumerate(lines[1:], start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            verb = parts[0]
            try:
                if verb == "COUNT":
                    count = int(parts[1])
                    break
                records += 1
                if verb in ("CERT-TOTAL", "CERT-ENUM"):
                    kind = parts[2]
                    subject = parse_index(parts[1])
                    premises = tuple(parse_index(p) for p in parts[3:])
                    if verb == "CERT-TOTAL":
                        session.issue_total(subject, (kind, *premises))
                    else:
                        session.issue_enum(subject, (kind, *premises))
                elif verb == "FEED":
                    j, recorded = parse_index(parts[1]), parse_index(parts[2])
                    got = session.q_feed(j)
                    if got != recorded:
                        raise SessionFormatError(
                            f"replay mismatch: FEED returned {index_str(got)[:32]},"
                            f" log says {index_str(recorded)[:32]}", lineno)
                elif verb == "QUERY":
                    x, recorded = parse_index(parts[1]), parse_index(parts[2])
                    got = session.q_query(x)
                    if got != recorded:
                        raise SessionFormatError(
                            f"replay mismatch: QUERY returned {index_str(got)[:32]},"
                            f" log says {index_str(recorded)[:32]}", lineno)
                elif verb == "BOTH":
                    x, j, recorded = (parse_index(parts[1]), parse_index(parts[2]),
                                      parse_index(parts[3]))
                    got = session.q_step(x=x, j=j)
                    if got != recorded:
                        raise SessionFormatError(
                            f"replay mismatch: BOTH returned {index_str(got)[:32]},"
                            f" log says {index_str(recorded)[:32]}", lineno)
                else:
                    raise SessionFormatError(f"unknown record {verb!r}", lineno)
            except SessionFormatError:
                raise
            except (IndexError, ValueError, CertificateError) as exc:
                raise SessionFormatError(f"malformed record ({exc})", lineno) from exc
        if count is None:
            last_good = records + 1  # header plus the records that replayed
            raise SessionFormatError(
                f"missing record-count trailer in {source}; last good line is {last_good}",
                last_good)
        if count != records:
            raise SessionFormatError(
                f"record count mismatch in {source}: trailer says {count}, found {records}")
        return session
