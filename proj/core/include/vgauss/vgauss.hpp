#ifndef VGAUSS_VGAUSS_HPP
#define VGAUSS_VGAUSS_HPP

#include "vgauss/bench_harness.hpp"
#include "vgauss/boxmuller.hpp"
#include "vgauss/fastfuncs.hpp"
#include "vgauss/generator.hpp"
#include "vgauss/kernels.hpp"
#include "vgauss/polar.hpp"
#include "vgauss/ratio.hpp"
#include "vgauss/rejection_buffer.hpp"
#include "vgauss/statcheck.hpp"
#include "vgauss/uniform_stream.hpp"

#endif  // VGAUSS_VGAUSS_HPP
