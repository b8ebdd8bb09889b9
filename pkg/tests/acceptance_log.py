"""Shared record of acceptance outcomes, printed at the end of the run."""
RESULTS: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    RESULTS[criterion] = (bool(ok), detail)
    print(line(criterion))


def line(criterion: int) -> str:
    ok, detail = RESULTS[criterion]
    return f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
