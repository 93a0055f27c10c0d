#pragma once

#include "squarestat/word.hpp"
#include "squarestat/squares.hpp"
#include "squarestat/fs_core.hpp"
#include "squarestat/mates.hpp"
#include "squarestat/analyze.hpp"
#include "squarestat/scanner.hpp"
#include "squarestat/fswords.hpp"
#include "squarestat/report.hpp"
