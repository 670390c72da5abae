#pragma once

#include "smoothfano/analysis.hpp"
#include "smoothfano/equivalence.hpp"
#include "smoothfano/errors.hpp"
#include "smoothfano/exact_linalg.hpp"
#include "smoothfano/fano_file.hpp"
#include "smoothfano/generators.hpp"
#include "smoothfano/lattice_vector.hpp"
#include "smoothfano/polytope.hpp"
#include "smoothfano/splitting.hpp"
#include "smoothfano/verify.hpp"
