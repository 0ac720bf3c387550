# Configuration file for ipython.

c = get_config()  # noqa # type: ignore

# ------------------------------------------------------------------------------
# InteractiveShellApp configuration
# ------------------------------------------------------------------------------

## A list of dotted module names of IPython extensions to load.
#  Default: []
c.InteractiveShellApp.extensions = ["purelog.magic"]
