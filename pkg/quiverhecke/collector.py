"""
The CheckCollector class.

Each check function should be decorated with an instance of CheckCollector(), and must have a unique
name. The CheckCollector() is then handed to a :py:class:`CheckRunner <quiverhecke.runner.CheckRunner>`,
which runs the checks.
"""

from .CheckInterface import Check


class CheckCollector:
    """ Used to group checks and pass them around all at once.

    Checks can be either added with :func:`add <quiverhecke.collector.CheckCollector.add>` or by using
    ``@collector()`` to decorate the function:

    .. code-block:: python3

        collector = CheckCollector()

        @collector(suite="relations")
        def idempotents(interface):
            interface.assert_operators_equal("1(0)*1(0)", "1(0)")
    """

    def __init__(self):
        self._checks = []

    def add(self, function, name=None, suite=None):
        """ Adds a check function to the group, if one with that name is not already present

        :param func function: The function to add
        :param str name: The name of the check, defaults to the function name
        :param str suite: Optional suite tag used for selection
        :raises: KeyError if the name is taken
        """
        name = name or function.__name__
        if self.find_by_name(name) is not None:
            raise KeyError("A check called {} already exists.".format(name))
        self._checks.append(Check(name, function, suite=suite))
        return function

    def find_by_name(self, name):
        """ Return the check with the given name, return ``None`` if it does not exist.

        :param str name: The name of the check
        :rtype: :py:class:`Check <quiverhecke.CheckInterface.Check>`, None
        """
        for check in self._checks:
            if check.name == name:
                return check
        return None

    def suites(self):
        """ Suite names in registration order. """
        seen = []
        for check in self._checks:
            if check.suite is not None and check.suite not in seen:
                seen.append(check.suite)
        return seen

    def in_suite(self, suite):
        return [check for check in self._checks if check.suite == suite]

    def names(self):
        return [check.name for check in self._checks]

    def __call__(self, *args, **kwargs):
        """ Add a check decorator-style, simply calls `add` when used to decorate something. """

        def _decorator(function):
            return self.add(function, *args, **kwargs)

        return _decorator

    def __iter__(self):
        return (check for check in self._checks)

    def __len__(self):
        return len(self._checks)
