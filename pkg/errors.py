"""
Error types for hookcalc

Engines raise these; the CLI maps them to exit codes.
"""


class HookcalcError(Exception):
    """Base class for all hookcalc errors"""

    exit_code = 1

    def to_dict(self):
        return {
            'success': False,
            'error': str(self),
            'kind': type(self).__name__,
        }


class InvalidArgumentError(HookcalcError, ValueError):
    """An input violates an operation's precondition"""

    exit_code = 2


class ResourceLimitError(HookcalcError, RuntimeError):
    """A requested size exceeds a configured cap"""

    exit_code = 3

    def __init__(self, cap_name, limit, requested):
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(
            f"{cap_name} cap exceeded: requested {requested}, limit {limit} "
            f"(raise HOOKCALC_{cap_name} to allow larger inputs)"
        )

    def to_dict(self):
        data = super().to_dict()
        data.update({'cap': self.cap_name, 'limit': self.limit, 'requested': self.requested})
        return data


class UnsupportedError(HookcalcError):
    """The request is outside what the implemented theory covers"""

    exit_code = 2


class VerificationFailure(HookcalcError):
    """At least one verification suite reported a mismatch"""

    exit_code = 1

    def __init__(self, message, status=None):
        self.status = status
        super().__init__(message)

    def to_dict(self):
        data = super().to_dict()
        if self.status is not None:
            data['suites'] = [
                {'name': s['name'], 'status': s['status'], 'error': s['error']} for s in self.status['suites']
            ]
        return data
