#pragma once

// Everything except the CLI front end.

#include "leibniz/error.hpp"
#include "leibniz/scalar.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/check.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/representation.hpp"
#include "leibniz/dendriform.hpp"
#include "leibniz/symplectic.hpp"
#include "leibniz/product.hpp"
#include "leibniz/complex.hpp"
#include "leibniz/kahler.hpp"
#include "leibniz/json_io.hpp"
