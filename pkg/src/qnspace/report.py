"""Pass/fail bookkeeping for identity sweeps, with text and JSON rendering."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Witness:
    inputs: str
    lhs: str
    rhs: str

    def to_json(self):
        return {"inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a family of inputs."""

    identity: str
    passes: int = 0
    failures: list[Witness] = field(default_factory=list)

    def record(self, inputs, lhs, rhs) -> bool:
        """Require lhs == rhs; on failure keep a printable witness."""
        if lhs == rhs:
            self.passes += 1
            return True
        self.failures.append(Witness(str(inputs), str(lhs), str(rhs)))
        return False

    def record_differ(self, inputs, lhs, rhs) -> bool:
        """Require lhs != rhs (used for non-cocommutativity witnesses)."""
        if lhs != rhs:
            self.passes += 1
            return True
        self.failures.append(Witness(str(inputs), str(lhs), str(rhs)))
        return False

    def record_true(self, inputs, condition, detail="") -> bool:
        if condition:
            self.passes += 1
            return True
        self.failures.append(Witness(str(inputs), detail, ""))
        return False

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {
            "identity": self.identity,
            "passes": self.passes,
            "failures": [w.to_json() for w in self.failures],
        }


@dataclass
class CheckReport:
    """A named bundle of identity reports (one verification suite)."""

    name: str
    identities: list[IdentityReport] = field(default_factory=list)

    def new(self, identity: str) -> IdentityReport:
        rep = IdentityReport(identity)
        self.identities.append(rep)
        return rep

    def extend(self, other: "CheckReport") -> None:
        self.identities.extend(other.identities)

    @property
    def ok(self) -> bool:
        return all(rep.ok for rep in self.identities)

    def render_text(self) -> str:
        lines = [f"suite {self.name}: {'PASS' if self.ok else 'FAIL'}"]
        for rep in self.identities:
            status = "PASS" if rep.ok else "FAIL"
            tail = f" failures={len(rep.failures)}" if rep.failures else ""
            lines.append(f"  {status} {rep.identity} (checks={rep.passes + len(rep.failures)}{tail})")
            for w in rep.failures:
                lines.append(f"    inputs: {w.inputs}")
                lines.append(f"    lhs:    {w.lhs}")
                lines.append(f"    rhs:    {w.rhs}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "suite": self.name,
            "ok": self.ok,
            "identities": [rep.to_json() for rep in self.identities],
        }
