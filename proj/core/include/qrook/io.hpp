#pragma once

#include <string>

#include "qrook/applications.hpp"
#include "qrook/qhit.hpp"
#include "qrook/rookcount.hpp"

namespace qrook {

// Bit-exact JSON form of a Laurent polynomial:
//   {"valuation": v, "coeffs": ["c0", "c1", ...]}
// with decimal-string coefficients of q^{v+i}.
std::string qpoly_json(const QPoly& p);
QPoly qpoly_from_json(const std::string& text);

// {"m": m, "n": n, "cells": [[i, j], ...]} with 1-based coordinates.
std::string board_json(const Board& b);
Board board_from_json(const std::string& text);

// Accepts either the grid format or the JSON board form (sniffed).
Board board_from_text(const std::string& text);

// {"m", "n", "board_size", "M": [canonical polynomial strings]}
std::string m_profile_json(const RankCounts& reduced, int board_size);

// {"m", "n", "H": [...], "partition_check": bool}
std::string h_profile_json(const HitProfile& h, bool partition_check);

// {"family", "n", "ranks", "violations": [{"w", "r", "poly"}], "stats"}
std::string conjecture_report_json(const ConjectureReport& report);

}  // namespace qrook
