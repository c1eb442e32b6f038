"""exact local cohomology, Ext and duality of squarefree modules"""

from .__version__ import *
from .util import *
from .linalg import *
from .lattice import *
from .module import *
from .cohomology import *
from .resolution import *
from .topology import *
from .classify import *
from .checks import *
from .library import *
from .formats import *
