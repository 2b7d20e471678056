#pragma once

#include "forge/audit.hpp"
#include "forge/document.hpp"
#include "forge/edit_ops.hpp"
#include "forge/example.hpp"
#include "forge/io.hpp"
#include "forge/lexicons.hpp"
#include "forge/metrics.hpp"
#include "forge/morphology.hpp"
#include "forge/pipeline.hpp"
#include "forge/rules.hpp"
#include "forge/token.hpp"
