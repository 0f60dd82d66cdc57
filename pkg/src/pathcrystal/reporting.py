"""Pass/fail bookkeeping shared by the verification suites."""

from dataclasses import dataclass, field

MAX_WITNESSES = 3


@dataclass
class RelationCheck:
    """Counts trials of one named relation and keeps failing witnesses."""

    name: str
    passes: int = 0
    fails: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, ok, witness=None):
        if ok:
            self.passes += 1
        else:
            self.fails += 1
            if witness is not None and len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)
        return ok

    @property
    def ok(self):
        return self.fails == 0

    def to_json(self):
        return {
            "relation": self.name,
            "passes": self.passes,
            "fails": self.fails,
            "witnesses": self.witnesses,
        }


def all_ok(checks):
    return all(c.ok for c in checks)
