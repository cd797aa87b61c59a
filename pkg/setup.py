#!/usr/bin/python3

from setuptools import setup
import sys


# config file
data_files = [("/etc/cfgen", ["etc/cfgen.conf"])]

# executable
data_files.append(("/usr/bin", ["src/bin/cfgen"]))

# get the version
sys.path.insert(0, "src")
try:
    import cfgen.version
except ImportError:
    vernum = "0.0.dev0"
else:
    vernum = cfgen.version.num
finally:
    sys.path = sys.path[1:]


setup(name="cfgen",
      version=vernum,
      description="cfgen",
      long_description="Exact continued fractions of the generating functions of "
                       "Bernoulli, Cauchy, Euler, harmonic and zeta related numbers",
      author="The cfgen authors",
      license="GPLv2+",
      packages=["cfgen", "cfgen.cli"],
      package_dir={"" : "src"},
      package_data={"cfgen": ["templates/*.tmpl"]},
      install_requires=["Mako"],
      data_files=data_files
      )
