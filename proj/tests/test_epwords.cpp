#include <doctest.h>

#include "catalog.hpp"
