"""Figure scripts for squidspec CSV outputs.

Consumes only the documented CSV schemas (no coupling to the solver
package), so either side can be rebuilt independently.
"""

__version__ = "0.1.0"

from .render import FigureSpec, render
from .schemas import SCHEMAS, SchemaError, read_table
