try:
    from ._synchrokit import *  # noqa: F401,F403
    from ._synchrokit import __version__  # noqa: F401
except ImportError:  # in-tree build: the extension sits beside the package
    from _synchrokit import *  # noqa: F401,F403
    from _synchrokit import __version__  # noqa: F401
