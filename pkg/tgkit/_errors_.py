"""
Date: 261018

{Description: exception hierarchy shared by every tgkit subpackage.
Input-side problems are ValidationErrors (exit status 1 on the command line),
malformed files are ParseErrors (exit 2) and failed proven invariants are
InternalInvariantViolations (exit 3)}
"""

class TorusGraphError(Exception):
    """Base class for every error raised by tgkit"""
    exit_code = 1

class ValidationError(TorusGraphError, ValueError):
    """The input is not a valid graph, torus graph or characteristic function"""
    exit_code = 1

class ParseError(TorusGraphError, ValueError):
    """A JSON document does not match the expected schema"""
    exit_code = 2

class InternalInvariantViolation(TorusGraphError, RuntimeError):
    """A property that holds for every valid input failed"""
    exit_code = 3

# graph layer
class NotTrivalent(ValidationError):
    pass

class Disconnected(ValidationError):
    pass

class NotSphere(ValidationError):
    pass

# lattice and torus graph layer
class NotUnimodular(ValidationError):
    pass

class InconsistentFacetVector(ValidationError):
    pass

class NoConnection(ValidationError):
    pass

class NotOrientable(ValidationError):
    pass

class InvalidInput(ValidationError):
    pass

# surgery
class InadmissibleSite(ValidationError):
    pass

class NotACut(ValidationError):
    pass

class InvalidCap(ValidationError):
    pass

# classifier
class NoMultipleEdge(ValidationError):
    pass

class Already3Connected(ValidationError):
    pass

class NotSBShaped(ValidationError):
    pass
