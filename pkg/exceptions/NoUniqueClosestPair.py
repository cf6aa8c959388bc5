from .PreconditionViolation import PreconditionViolation

class NoUniqueClosestPair(PreconditionViolation):
    pass
