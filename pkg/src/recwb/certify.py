"""Certificate calculus: finite derivations that an index is total, or is an
enumerator (total, with every output a certified-total index).

This replaces an undecidable side condition with a small sound proof system.
The rules are exactly the closure the workbench needs:

  total:  syntactic        p has no While and no Eval (straight-line halts)
          psi <j>          subject = diagonal index of a certified enumerator j
          compose <a> <b>  subject = compose(a, b), both certified total
  enum:   const <t>        subject = const_program(t), t certified total
          prepend <j> <v>  subject = prepend_value(j, v), j certified
                           enumerator, v certified total

The registry is append-only; certificates are never revoked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import build_psi, compose, const_program, prepend_value
from .lang import Eval, Program, While
from .numbering import decode_program, index_str, parse_index


class CertificateError(ValueError):
    """A side condition failed; the message names the failed premise."""


def check_syntactic_total(p: Program) -> bool:
    """True iff p is straight-line: no While, no Eval anywhere."""

    def ok(stmts) -> bool:
        for st in stmts:
            if type(st) is Eval:
                return False
            if type(st) is While:
                return False
        return True

    return ok(p.body)


@dataclass(frozen=True)
class Certificate:
    subject: int
    kind: str  # syntactic | psi | compose | const | prepend
    claim: str  # "total" | "enum"
    premises: tuple[int, ...] = ()

    def record(self) -> str:
        parts = ["CERT-TOTAL" if self.claim == "total" else "CERT-ENUM",
                 index_str(self.subject), self.kind]
        parts.extend(index_str(p) for p in self.premises)
        return " ".join(parts)


@dataclass
class Registry:
    """Append-only store of certificates, keyed by subject index."""

    total: dict = field(default_factory=dict)
    enum: dict = field(default_factory=dict)
    records: list = field(default_factory=list)  # issuance order

    def is_certified_total(self, i: int) -> bool:
        return i in self.total

    def is_certified_enumerator(self, i: int) -> bool:
        return i in self.enum

    def _store(self, cert: Certificate) -> Certificate:
        table = self.total if cert.claim == "total" else self.enum
        existing = table.get(cert.subject)
        if existing is not None:
            if existing.kind == cert.kind and existing.premises == cert.premises:
                return existing  # idempotent per (subject, kind)
            return existing  # first derivation wins; registry is append-only
        table[cert.subject] = cert
        self.records.append(cert)
        return cert

    def issue_total(self, i: int, justification: tuple) -> Certificate:
        kind = justification[0]
        if kind == "syntactic":
            if not check_syntactic_total(decode_program(i)):
                raise CertificateError(
                    f"premise failed: program {index_str(i)[:32]} contains While or Eval"
                )
            return self._store(Certificate(i, "syntactic", "total"))
        if kind == "psi":
            (j,) = justification[1:]
            if not self.is_certified_enumerator(j):
                raise CertificateError(
                    f"premise failed: {index_str(j)[:32]} holds no enumerator certificate"
                )
            if build_psi(j).index != i:
                raise CertificateError(
                    "premise failed: subject is not the diagonal index of the given source"
                )
            return self._store(Certificate(i, "psi", "total", (j,)))
        if kind == "compose":
            a, b = justification[1:]
            for part in (a, b):
                if not self.is_certified_total(part):
                    raise CertificateError(
                        f"premise failed: {index_str(part)[:32]} holds no total certificate"
                    )
            if compose(a, b) != i:
                raise CertificateError(
                    "premise failed: subject is not the composition of the given parts"
                )
            return self._store(Certificate(i, "compose", "total", (a, b)))
        raise CertificateError(f"unknown totality justification {kind!r}")

    def issue_enum(self, i: int, justification: tuple) -> Certificate:
        kind = justification[0]
        if kind == "const":
            (t,) = justification[1:]
            if not self.is_certified_total(t):
                raise CertificateError(
                    f"premise failed: {index_str(t)[:32]} holds no total certificate"
                )
            if const_program(t) != i:
                raise CertificateError(
                    "premise failed: subject is not the constant program for the given value"
                )
            return self._store(Certificate(i, "const", "enum", (t,)))
        if kind == "prepend":
            j, v = justification[1:]
            if not self.is_certified_enumerator(j):
                raise CertificateError(
                    f"premise failed: {index_str(j)[:32]} holds no enumerator certificate"
                )
            if not self.is_certified_total(v):
                raise CertificateError(
                    f"premise failed: {index_str(v)[:32]} holds no total certificate"
                )
            if prepend_value(j, v) != i:
                raise CertificateError(
                    "premise failed: subject is not the prepend of the given tail and head"
                )
            return self._store(Certificate(i, "prepend", "enum", (j, v)))
        raise CertificateError(f"unknown enumerator justification {kind!r}")

    def apply_rule_psi(self, j: int) -> Certificate:
        """The gated step: an enumerator certificate for j yields a total
        certificate for the diagonal index of j."""
        if not self.is_certified_enumerator(j):
            raise CertificateError(
                f"gate violation: {index_str(j)[:32]} holds no enumerator certificate"
            )
        return self.issue_total(build_psi(j).index, ("psi", j))

    # --- persistence ----------------------------------------------------

    def dump_records(self) -> list[str]:
        return [c.record() for c in self.records]

    def replay_record(self, line: str) -> Certificate:
        parts = line.split()
        claim_tag, subject, kind = parts[0], parse_index(parts[1]), parts[2]
        premises = tuple(parse_index(p) for p in parts[3:])
        if claim_tag == "CERT-TOTAL":
            return self.issue_total(subject, (kind, *premises))
        if claim_tag == "CERT-ENUM":
            return self.issue_enum(subject, (kind, *premises))
        raise CertificateError(f"unknown certificate record {claim_tag!r}")
