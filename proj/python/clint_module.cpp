#include <pybind11/pybind11.h>
PYBIND11_MODULE(_clint, m) { m.doc() = "clint core bindings"; }
