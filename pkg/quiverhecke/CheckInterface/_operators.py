from ..algebra import TwistedOperator, faithfulness_check
from ..exceptions import OperatorMismatch
from ..opexpr import evaluate_opexpr


def operator(self, text: str) -> TwistedOperator:
    """ Build an operator from the expression language. **Helper Function**

    :param str text: An expression such as ``"s(0,1)*z(0,0)"``
    :rtype: TwistedOperator
    """
    return evaluate_opexpr(self.ctx, text)


def _coerce(self, value) -> TwistedOperator:
    return self.operator(value) if isinstance(value, str) else value


def assert_operators_equal(self, left, right, what=None):
    """ Assert two operators have identical term dictionaries.

    :param left: A :py:class:`TwistedOperator` or an operator expression
    :param right: A :py:class:`TwistedOperator` or an operator expression
    :param str what: Description used in the failure message
    :raises: OperatorMismatch
    """
    left, right = _coerce(self, left), _coerce(self, right)
    if left != right:
        raise OperatorMismatch("{}: {} != {}".format(what or "operators differ", left, right))


def assert_operator_zero(self, value, what=None):
    """ Assert an operator vanishes.

    :raises: OperatorMismatch
    """
    value = _coerce(self, value)
    if not value.is_zero:
        raise OperatorMismatch("{}: {} is not zero".format(what or "operator", value))


def assert_acts_equally(self, left, right, what=None):
    """ Assert two operators act identically on every monomial up to the degree bound.

    :raises: OperatorMismatch
    """
    left, right = _coerce(self, left), _coerce(self, right)
    if not faithfulness_check(self.ctx, left, right):
        raise OperatorMismatch("{}: actions differ".format(what or "operators"))
