#include "clari/env.hpp"

// Data-only module; validating operations live in typing.cpp.
