__title__ = 'sqfree'
__description__ = 'local cohomology and duality of squarefree modules over face lattices'
__url__ = 'https://github.com/quantenschaum/sqfree'
__version__ = '0.1a1'
__author__ = 'quantenschaum'
__author_email__ = 'software@louisenhof2.de'
__license__ = 'GPLv3'
__copyright__ = '2026, ' + __author__
