#include "pdeform/commands.hpp"
