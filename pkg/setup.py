from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernels are an optional accelerator; the package falls back
# to src/compnum/_kernels_py.py when the extension is missing.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "compnum._kernels",
                ["src/compnum/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O2", "-std=c++11"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
