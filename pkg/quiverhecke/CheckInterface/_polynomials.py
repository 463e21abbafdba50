from ..exceptions import IdentityMismatch


def assert_polys_equal(self, left, right, what=None):
    """ Assert two polynomials are equal.

    :raises: IdentityMismatch
    """
    if left != right:
        raise IdentityMismatch("{}: {} != {}".format(what or "polynomials differ", left, right))


def assert_ratfuns_equal(self, left, right, what=None):
    """ Assert two rational functions are equal (compared by cross-multiplication).

    :raises: IdentityMismatch
    """
    if not left == right:
        raise IdentityMismatch("{}: {} != {}".format(what or "rational functions differ", left, right))


def assert_multisets_equal(self, left, right, what=None):
    """ Assert two weight multisets agree, ignoring zero multiplicities.

    :raises: IdentityMismatch
    """
    left = {k: v for k, v in left.items() if v}
    right = {k: v for k, v in right.items() if v}
    if left != right:
        raise IdentityMismatch("{}: {} != {}".format(what or "multisets differ", sorted(left.items()), sorted(right.items())))
