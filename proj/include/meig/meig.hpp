#pragma once

#include "meig/charge.hpp"
#include "meig/diagnostics.hpp"
#include "meig/eigensolver.hpp"
#include "meig/embedding.hpp"
#include "meig/errors.hpp"
#include "meig/generators.hpp"
#include "meig/graph.hpp"
#include "meig/io.hpp"
#include "meig/laplacian.hpp"
#include "meig/pipeline.hpp"
