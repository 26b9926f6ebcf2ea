class DomainError(Exception):
    """
    Exception for when an input is outside an operation's domain
    """

    def __init__(self, message):
        self.message = message
        super().__init__(message)

    def __str__(self):
        return self.message


class NoInverse(DomainError):
    """
    Exception for when e and n share a divisor, so e has no inverse modulo n
    """

    def __init__(self, divisor: int):
        self.divisor = divisor
        super().__init__(f"no inverse: gcd={divisor}")


class TraceLimitExceeded(DomainError):
    """
    Exception for when a step trace would grow past the configured row limit
    """

    def __init__(self, message):
        super().__init__(message)


class GenerationError(DomainError):
    """
    Exception for when a workload cannot be generated from its spec
    """

    def __init__(self, message):
        super().__init__(message)


class InternalConsistencyError(Exception):
    """
    Exception for when an algorithm exhausts an iteration cap it provably never reaches
    """

    def __init__(self, message):
        self.message = message
        super().__init__(message)

    def __str__(self):
        return self.message


class FloatPathFailure(Exception):
    """
    Exception for when the floating-point fraction-integer run fails
    """

    def __init__(self, verdict: str, index: int, message: str):
        self.verdict = verdict
        self.index = index
        self.message = message
        super().__init__(message)

    def __str__(self):
        return self.message


class VerificationFailure(Exception):
    """
    Exception for when a benchmarked algorithm returns an unverified inverse
    """

    def __init__(self, algorithm: str, e: int, n: int):
        self.algorithm = algorithm
        self.e = e
        self.n = n
        self.message = f"verification failed: alg={algorithm} e={e} n={n}"
        super().__init__(self.message)

    def __str__(self):
        return self.message
