"""
Date: 261018

{Description: validation diagnostics and their tabular form}
"""

from dataclasses import dataclass, asdict

import pandas as pd

@dataclass(frozen=True)
class Diagnostic:
    check: str    # which condition failed, e.g. 'simple-boundary', 'axiom-2'
    where: str    # 'vertex 3', 'dart 7', 'facet 2'
    message: str

    def __str__(self):
        return "%s [%s]: %s" % (self.where, self.check, self.message)

def diagnostics_frame(diagnostics):
    """Diagnostics as a DataFrame with columns check, where, message"""
    return pd.DataFrame([asdict(d) for d in diagnostics], columns=['check', 'where', 'message'])
