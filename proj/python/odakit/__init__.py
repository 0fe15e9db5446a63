"""Meet-completions of finite posets and ordered domain algebras."""

try:
    # installed wheel layout: the extension lives inside the package
    from ._odakit import *  # noqa: F401,F403
    from ._odakit import __doc__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits next to the package on sys.path
    from _odakit import *  # noqa: F401,F403
    from _odakit import __doc__  # noqa: F401

__version__ = "0.1.0"
