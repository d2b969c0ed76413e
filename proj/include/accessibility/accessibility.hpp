#ifndef ACCESSIBILITY_ACCESSIBILITY_HPP
#define ACCESSIBILITY_ACCESSIBILITY_HPP

#include "acylindricity.hpp"
#include "decoration.hpp"
#include "errors.hpp"
#include "fold.hpp"
#include "graph.hpp"
#include "graph_of_groups.hpp"
#include "group.hpp"
#include "instance.hpp"
#include "pipeline.hpp"
#include "report.hpp"

#endif  // ACCESSIBILITY_ACCESSIBILITY_HPP
