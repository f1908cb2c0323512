"""Build the optional compiled saturation kernel.

The package is fully functional without it (the pure-Python kernel is
selected at import when the extension is missing), so a failed extension
build falls back to a plain install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        "src/cnldoc/engine/_kernel.pyx",
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # no Cython / no compiler: pure-Python install
    print("skipping compiled kernel (%s)" % exc)

setup(ext_modules=ext_modules)
