#pragma once

#include "magicpoly/structure.hpp"
#include "magicpoly/properties.hpp"
#include "magicpoly/verify.hpp"
#include "magicpoly/construct.hpp"
#include "magicpoly/search.hpp"
#include "magicpoly/render.hpp"
#include "magicpoly/document.hpp"
