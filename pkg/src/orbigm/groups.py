"""Finite diagonal symmetry groups acting on two variables.

Elements are pairs of exponents (k1, k2) meaning (x, y) -> (zeta^k1 x, zeta^k2 y)
for a fixed primitive root zeta of order `root_order`.  The group must be
closed under composition; element 0 is the identity.  Eigenvalues come out
exact (Fraction for root_order <= 2, Cyclo beyond).
"""

from .scalars import root_of_unity


class DiagonalGroup:
    def __init__(self, root_order, exponents):
        self.root_order = root_order
        self.exponents = [tuple(e) for e in exponents]
        if self.exponents[0] != (0, 0):
            raise ValueError("element 0 must be the identity")
        self._index = {e: i for i, e in enumerate(self.exponents)}
        if len(self._index) != len(self.exponents):
            raise ValueError("duplicate group elements")
        n = root_order
        for e in self.exponents:
            for f in self.exponents:
                prod = ((e[0] + f[0]) % n, (e[1] + f[1]) % n)
                if prod not in self._index:
                    raise ValueError("group is not closed under composition")
        self._eigen = [(root_of_unity(n, e[0]), root_of_unity(n, e[1]))
                       for e in self.exponents]

    def __len__(self):
        return len(self.exponents)

    @property
    def identity(self):
        return 0

    def mul(self, i, j):
        n = self.root_order
        e, f = self.exponents[i], self.exponents[j]
        return self._index[((e[0] + f[0]) % n, (e[1] + f[1]) % n)]

    def inv(self, i):
        n = self.root_order
        e = self.exponents[i]
        return self._index[((-e[0]) % n, (-e[1]) % n)]

    def eigen(self, i):
        return self._eigen[i]

    def act_mono(self, i, m):
        """Scalar factor of g acting on the monomial x^a y^b."""
        e = self.exponents[i]
        n = self.root_order
        return root_of_unity(n, (e[0] * m[0] + e[1] * m[1]) % n)

    def fixes_var(self, i, var):
        return self.exponents[i][var] % self.root_order == 0

    def unfixed_vars(self, i):
        """Indices of variables moved by element i (the sector's normal directions)."""
        return tuple(v for v in (0, 1) if not self.fixes_var(i, v))

    def is_calabi_yau(self):
        """Determinant one: the condition under which twisted sectors carry no form-level homotopy."""
        n = self.root_order
        return all((e[0] + e[1]) % n == 0 for e in self.exponents)

    def names(self):
        return ["g%d" % i for i in range(len(self.exponents))]


def cyclic_two_group():
    """Z/2 acting by (x, y) -> (-x, -y)."""
    return DiagonalGroup(2, [(0, 0), (1, 1)])


def trivial_group():
    return DiagonalGroup(1, [(0, 0)])
