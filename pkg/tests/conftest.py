import numpy as np

# odd prime powers up to 200, by hand: primes, plus 9, 25, 27, 49, 81, 121, 125, 169
ODD_PRIMES_200 = [p for p in range(3, 201, 2) if all(p % d for d in range(3, int(p**0.5) + 1, 2))]
ODD_PRIME_POWERS_200 = sorted(ODD_PRIMES_200 + [9, 25, 27, 49, 81, 121, 125, 169])


def bareiss_det(rows) -> int:
    """Fraction-free exact determinant."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def square_set(q: int) -> set[int]:
    return {y * y % q for y in range(1, q)}


def legendre_by_squares(a: int, q: int) -> int:
    a %= q
    if a == 0:
        return 0
    return 1 if a in square_set(q) else -1


def gram_by_rows(h) -> np.ndarray:
    """Row inner products one pair at a time, as Python integers."""
    rows = [list(map(int, r)) for r in np.asarray(h)]
    n = len(rows)
    return np.array([[sum(x * y for x, y in zip(rows[i], rows[j])) for j in range(n)] for i in range(n)])


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
