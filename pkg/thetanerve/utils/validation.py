from dataclasses import dataclass, field
from typing import Any

@dataclass
class ValidationReport:
    """Outcome of a check that may legitimately fail.

    Evaluates to ``valid`` in a boolean context, so ``if validate_functor(f):``
    reads naturally. ``diagnostics`` names the first violated law (and may
    carry further notes); ``payload`` holds counts or other JSON-ready results.
    """
    valid: bool
    diagnostics: list[str] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid

    @classmethod
    def ok(cls, **payload: Any) -> "ValidationReport":
        return cls(True, [], dict(payload))

    @classmethod
    def failure(cls, diagnostic: str, **payload: Any) -> "ValidationReport":
        return cls(False, [diagnostic], dict(payload))

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        """Conjunction of two reports; diagnostics keep their order."""
        return ValidationReport(
            self.valid and other.valid,
            self.diagnostics + other.diagnostics,
            {**self.payload, **other.payload},
        )
