from .GeometryError import GeometryError
from .DuplicatePoint import DuplicatePoint
from .AllCoincident import AllCoincident
from .DegenerateSegment import DegenerateSegment
from .CoincidentSites import CoincidentSites
from .DegenerateInput import DegenerateInput
from .EmptyCandidates import EmptyCandidates
from .GenericityFailure import GenericityFailure
from .PreconditionViolation import PreconditionViolation
from .NoUniqueClosestPair import NoUniqueClosestPair
from .InputParseError import InputParseError
