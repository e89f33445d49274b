#pragma once

#include "imfid/contour.hpp"
#include "imfid/credal.hpp"
#include "imfid/error.hpp"
#include "imfid/false_confidence.hpp"
#include "imfid/fiducial.hpp"
#include "imfid/group.hpp"
#include "imfid/hypothesis.hpp"
#include "imfid/im.hpp"
#include "imfid/io.hpp"
#include "imfid/marginal.hpp"
#include "imfid/model.hpp"
#include "imfid/report.hpp"
#include "imfid/rng.hpp"
