"""Independent brute-force oracles shared by the property and acceptance tests."""

from fractions import Fraction


def monomials_of_degree(nvars, degree):
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree + 1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def membership_by_linear_algebra(f, gens, ring):
    """Homogeneous ideal membership decided by exact Gaussian elimination.

    Builds the column space of all monomial multiples of the generators at
    f's total degree and checks solvability; entirely independent of the
    Groebner machinery.
    """
    d = f.total_degree()
    cols = []
    for g in gens:
        dg = g.total_degree()
        if dg > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - dg):
            cols.append((g, m))
    monos = sorted({tuple(a + b for a, b in zip(m, t)) for g, m in cols
                    for t in g.terms} | set(f.terms))
    index = {m: i for i, m in enumerate(monos)}
    matrix = []
    for g, m in cols:
        col = [Fraction(0)] * len(monos)
        for t, c in g.terms.items():
            col[index[tuple(a + b for a, b in zip(m, t))]] += c
        matrix.append(col)
    target = [Fraction(0)] * len(monos)
    for t, c in f.terms.items():
        target[index[t]] += c
    rows = list(map(list, zip(*matrix))) if matrix else [[] for _ in target]
    aug = [row + [target[i]] for i, row in enumerate(rows)]
    ncols = len(matrix)
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(aug)) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        pv = aug[pivot_row][col]
        aug[pivot_row] = [x / pv for x in aug[pivot_row]]
        for r in range(len(aug)):
            if r != pivot_row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
    for row in aug:
        if any(row[:-1]):
            continue
        if row[-1]:
            return False
    return True


def random_homogeneous_difference(ring, rng, degree):
    monos = monomials_of_degree(ring.nvars, degree)
    return ring.monomial(tuple(rng.choice(monos))) - ring.monomial(
        tuple(rng.choice(monos))
    )
