# Helpers common to the library modules and the CLI reports
from dataclasses import dataclass
from typing import Callable

# Reports use a fixed number of decimals so golden outputs are stable
DECIMALS = 6


def format_float(value: float, decimals: int = DECIMALS) -> str:
    """Fixed-point text for a float. Ties between representable values round half to even."""
    text = f"{value:.{decimals}f}"
    # Avoid "-0.000000" for tiny negative noise
    if float(text) == 0.0:
        text = f"{0.0:.{decimals}f}"
    return text


def round_float(value: float, decimals: int = DECIMALS) -> float:
    return float(format_float(value, decimals))


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Pass/fail per axiom, keeping the first counterexample found."""

    title: str
    results: tuple[AxiomResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]


class AxiomTally:
    def __init__(self, names: list[str]):
        self.names = names
        self.checked = {n: 0 for n in names}
        self.counterexamples: dict[str, str] = {}

    def record(self, name: str, ok: bool, detail: Callable[[], str]) -> None:
        self.checked[name] += 1
        if not ok and name not in self.counterexamples:
            self.counterexamples[name] = detail()

    def report(self, title: str) -> AxiomReport:
        return AxiomReport(
            title=title,
            results=tuple(
                AxiomResult(
                    name=n,
                    passed=n not in self.counterexamples,
                    checked=self.checked[n],
                    counterexample=self.counterexamples.get(n),
                )
                for n in self.names
            ),
        )


