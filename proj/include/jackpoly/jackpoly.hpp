#pragma once

#include "jackpoly/binomial.hpp"
#include "jackpoly/estimates.hpp"
#include "jackpoly/genfun.hpp"
#include "jackpoly/io.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/jack_oracle.hpp"
#include "jackpoly/measures.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/series.hpp"
#include "jackpoly/shifted.hpp"
#include "jackpoly/specialization.hpp"
#include "jackpoly/symfun.hpp"
#include "jackpoly/vk.hpp"
