#pragma once

#include "errors.hpp"
#include "poset.hpp"
#include "profile.hpp"
#include "walk.hpp"
#include "slicing.hpp"
#include "symmetric.hpp"
#include "field.hpp"
#include "codes.hpp"
#include "render.hpp"
