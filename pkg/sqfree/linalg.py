"""Exact linear algebra over the rationals and prime fields.

Every linear map in this package (structure maps of modules, differentials of
complexes) is a numpy array of ``dtype=object`` whose entries are exact field
elements: :class:`fractions.Fraction` (or plain ``int``) over the rationals and
``int`` residues in ``[0, p)`` over a prime field. A matrix of shape
``(rows, cols)`` maps a ``cols``-dimensional space into a ``rows``-dimensional
one, columns are images of basis vectors.

There is no floating point anywhere.

Usage::

    from sqfree.linalg import QQ, PrimeField
    m = QQ.matrix([[1, 2], [2, 4]])
    QQ.rank(m)               # 1
    QQ.kernel_basis(m)       # [[-2], [1]]
    PrimeField(2).rank(QQ.matrix([[1, 1], [1, 1]]))  # 1
"""

from fractions import Fraction
from math import lcm

import numpy as np
from sympy import isprime

from .util import LinAlgError, ComplexError, InputError

__all__ = ['Field', 'Rationals', 'PrimeField', 'QQ', 'parse_field',
           'rank', 'kernel_basis', 'cohomology_dim', 'solve', 'image_basis',
           'complement_basis']


def _bareiss_rank(rows, ncols):
    """fraction-free elimination on integer rows, returns the rank"""
    m = [list(r) for r in rows]
    nrows = len(m)
    r, prev = 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row = m[i]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row[j] = (row[j] * p - mic * m[r][j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


class Field:
    """A coefficient field for exact matrices.

    Subclasses define how scalars are converted, inverted, parsed and printed.
    The matrix methods are shared.
    """

    characteristic = 0

    def __eq__(self, other):
        return (isinstance(other, Field) and
                self.characteristic == other.characteristic)

    def __hash__(self):
        return hash(('field', self.characteristic))

    def __repr__(self):
        return '{}()'.format(type(self).__name__)

    # scalars

    def convert(self, x):
        raise NotImplementedError()

    def reduce(self, x):
        """normalize result of ring arithmetic"""
        return x

    def inverse(self, x):
        raise NotImplementedError()

    def parse(self, text):
        """parse a decimal string like ``'3'`` or ``'-2/5'``"""
        try:
            return self.convert(Fraction(str(text)))
        except (ValueError, ZeroDivisionError) as e:
            raise InputError('not a field element: {!r}'.format(text),
                             kind='field-entry') from e

    def format(self, x):
        return str(x)

    # matrices

    def matrix(self, rows, shape=None):
        """Build a matrix from nested rows.

        Args:
            rows: nested sequence (or 2d array) of convertible entries
            shape (tuple): (rows, cols), required if there are no rows

        Returns:
            numpy.ndarray: object array of field elements

        Raises:
            LinAlgError: if the entry count does not match the shape
        """
        rows = [list(r) for r in rows]
        if shape is None:
            if not rows:
                raise LinAlgError('shape required for an empty matrix',
                                  kind='shape')
            shape = (len(rows), len(rows[0]))
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise LinAlgError('entry count inconsistent with {}x{}'
                              .format(*shape), kind='shape')
        m = np.zeros(shape, dtype=object)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                m[i, j] = self.convert(x)
        return m

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=object)

    def identity(self, n):
        m = self.zeros(n, n)
        for i in range(n):
            m[i, i] = self.convert(1)
        return m

    def normalize(self, m):
        return m

    def mul(self, a, b):
        """matrix product a.b"""
        if a.shape[1] != b.shape[0]:
            raise LinAlgError('cannot multiply {} by {}'.format(
                a.shape, b.shape), kind='shape')
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return self.normalize(a.dot(b))

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def scale(self, c, a):
        return self.normalize(self.convert(c) * a)

    def is_zero(self, m):
        return all(x == 0 for x in m.flat)

    def equal(self, a, b):
        return a.shape == b.shape and self.is_zero(self.sub(a, b))

    def rref(self, m):
        """Reduced row echelon form by Gauss-Jordan elimination.

        Args:
            m (numpy.ndarray): matrix

        Returns:
            tuple: (list of rows of the reduced matrix, list of pivot columns)
        """
        rows = [[self.convert(x) for x in r] for r in m.tolist()]
        nrows, ncols = m.shape
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = self.inverse(rows[r][c])
            rows[r] = [self.reduce(x * inv) for x in rows[r]]
            for i in range(nrows):
                f = rows[i][c]
                if i != r and f != 0:
                    rows[i] = [self.reduce(x - f * y)
                               for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return rows, pivots

    def rank(self, m):
        """rank of m"""
        return len(self.rref(m)[1])

    def kernel_basis(self, m):
        """Basis of the null space of m.

        Args:
            m (numpy.ndarray): matrix of shape (r, c)

        Returns:
            numpy.ndarray: matrix of shape (c, k), columns span ker(m)
        """
        rows, pivots = self.rref(m)
        ncols = m.shape[1]
        free = [c for c in range(ncols) if c not in set(pivots)]
        k = self.zeros(ncols, len(free))
        for j, f in enumerate(free):
            k[f, j] = self.convert(1)
            for r, pc in enumerate(pivots):
                k[pc, j] = self.reduce(-rows[r][f])
        return k

    def solve(self, a, b):
        """Solve a.x = b, free variables are set to 0.

        Raises:
            LinAlgError: if the system is inconsistent
        """
        if a.shape[0] != b.shape[0]:
            raise LinAlgError('cannot solve {} against {}'.format(
                a.shape, b.shape), kind='shape')
        n = a.shape[1]
        rows, pivots = self.rref(np.hstack((a, b)))
        if pivots and pivots[-1] >= n:
            raise LinAlgError('inconsistent linear system',
                              kind='inconsistent')
        x = self.zeros(n, b.shape[1])
        for r, pc in enumerate(pivots):
            x[pc, :] = rows[r][n:]
        return x

    def image_basis(self, m):
        """independent columns of m spanning its column space"""
        return m[:, self.rref(m)[1]]

    def complement_basis(self, cols, dim=None):
        """Standard basis vectors completing independent columns to a basis.

        Args:
            cols (numpy.ndarray): independent columns, shape (dim, s)
            dim (int): ambient dimension, defaults to cols.shape[0]

        Returns:
            numpy.ndarray: shape (dim, dim - s), least indices first

        Raises:
            LinAlgError: if cols are dependent
        """
        dim = cols.shape[0] if dim is None else dim
        s = cols.shape[1]
        _, pivots = self.rref(np.hstack((cols, self.identity(dim))))
        if pivots[:s] != list(range(s)):
            raise LinAlgError('columns are linearly dependent',
                              kind='dependent')
        return self.identity(dim)[:, [p - s for p in pivots[s:]]]


class Rationals(Field):
    """the field of rational numbers, Bareiss elimination for ranks"""

    characteristic = 0

    def __str__(self):
        return 'q'

    def convert(self, x):
        if isinstance(x, float):
            raise LinAlgError('floating point entry {!r} is not exact'
                              .format(x), kind='float')
        return Fraction(x)

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError('inverse of 0')
        return 1 / Fraction(x)

    def rank(self, m):
        rows = []
        for r in m.tolist():
            r = [Fraction(x) for x in r]
            d = lcm(*(x.denominator for x in r))
            rows.append([(x * d).numerator for x in r])
        return _bareiss_rank(rows, m.shape[1])


class PrimeField(Field):
    """the prime field F_p.

    Args:
        p (int): prime characteristic, machine word sized

    Raises:
        InputError: if p is not prime
    """

    def __init__(self, p):
        p = int(p)
        if not isprime(p):
            raise InputError('characteristic {} is not prime'.format(p),
                             kind='field')
        self.characteristic = p

    def __repr__(self):
        return 'PrimeField({})'.format(self.characteristic)

    def __str__(self):
        return 'fp:{}'.format(self.characteristic)

    def convert(self, x):
        p = self.characteristic
        if isinstance(x, float):
            raise LinAlgError('floating point entry {!r} is not exact'
                              .format(x), kind='float')
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise LinAlgError('{} has no residue mod {}'.format(x, p),
                                  kind='field-entry')
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def reduce(self, x):
        return x % self.characteristic

    def inverse(self, x):
        if x % self.characteristic == 0:
            raise ZeroDivisionError('inverse of 0')
        return pow(int(x), -1, self.characteristic)

    def normalize(self, m):
        return m % self.characteristic


QQ = Rationals()


def parse_field(text):
    """Parse a field flag.

    Args:
        text (str): ``q`` for the rationals or ``fp:<p>`` for F_p

    Returns:
        Field: the field

    Raises:
        InputError: on unknown syntax or non-prime p
    """
    text = str(text).strip().lower()
    if text in ('q', 'qq', 'rationals'):
        return QQ
    if text.startswith('fp:'):
        try:
            p = int(text[3:])
        except ValueError as e:
            raise InputError('bad field flag {!r}'.format(text),
                             kind='field') from e
        return PrimeField(p)
    raise InputError('bad field flag {!r}, use q or fp:<p>'.format(text),
                     kind='field')


def rank(m, field=QQ):
    """rank of m over field"""
    return field.rank(m)


def kernel_basis(m, field=QQ):
    """columns spanning the null space of m, see :meth:`Field.kernel_basis`"""
    return field.kernel_basis(m)


def solve(a, b, field=QQ):
    """a solution x of a.x = b, see :meth:`Field.solve`"""
    return field.solve(a, b)


def image_basis(m, field=QQ):
    return field.image_basis(m)


def complement_basis(cols, dim=None, field=QQ):
    return field.complement_basis(cols, dim)


def cohomology_dim(d_in, d_out, field=QQ):
    """Dimension of the cohomology at the middle of ``-d_in-> . -d_out->``.

    Args:
        d_in (numpy.ndarray): incoming differential, shape (m, l)
        d_out (numpy.ndarray): outgoing differential, shape (r, m)
        field (Field): coefficient field

    Returns:
        int: dim ker(d_out) - rank(d_in)

    Raises:
        ComplexError: if the shapes do not chain or d_out.d_in != 0
    """
    if d_in.shape[0] != d_out.shape[1]:
        raise ComplexError('differentials of shape {} and {} do not chain'
                           .format(d_in.shape, d_out.shape), kind='shape')
    if not field.is_zero(field.mul(d_out, d_in)):
        raise ComplexError('composition of differentials is not zero')
    return d_out.shape[1] - field.rank(d_out) - field.rank(d_in)
