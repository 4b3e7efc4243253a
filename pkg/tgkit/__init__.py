from tgkit import lattice
from tgkit import graph
from tgkit import torus
from tgkit import surgery
from tgkit import classify
from tgkit import formats
from tgkit._errors_ import TorusGraphError, ValidationError, ParseError, InternalInvariantViolation
from tgkit._report_ import Diagnostic, diagnostics_frame
