#include <doctest.h>
#include "influmech/audit.hpp"
