#pragma once

#include "wordspot/errors.hpp"
#include "wordspot/image.hpp"
#include "wordspot/index.hpp"
#include "wordspot/line_segmentation.hpp"
#include "wordspot/matchers.hpp"
#include "wordspot/parallel.hpp"
#include "wordspot/pnm.hpp"
#include "wordspot/profile.hpp"
#include "wordspot/ranking.hpp"
#include "wordspot/serialize.hpp"
#include "wordspot/shape_code.hpp"
#include "wordspot/synthetic.hpp"
#include "wordspot/ulam.hpp"
#include "wordspot/word_segmentation.hpp"
