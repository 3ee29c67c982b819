"""Build script: compiles the optional fast-kernel extension.

The package works without the extension (a pure numpy fallback is selected
at import time), so a failed compile downgrades to a warning instead of
breaking the install.
"""

from setuptools import Extension, setup


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "coarse_lab._kernels._cykernels",
        ["src/coarse_lab/_kernels/_cykernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True
    return cythonize([ext], language_level="3")


setup(ext_modules=_extensions())
