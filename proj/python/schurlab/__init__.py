"""Python surface of the schurlab toolkit (thin re-export of the extension)."""

from ._schurlab import *  # noqa: F401,F403
