#pragma once

// Published reference values for the logistic twin experiment tables.

#include <array>
#include <limits>

namespace ref {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline constexpr std::array<double, 3> kStartTimes{0.0, 4.0, 8.0};
inline constexpr std::array<int, 4> kSpacings{1, 4, 8, 12};
inline constexpr std::array<int, 3> kCounts{2, 4, 6};

/// [t0 block][i][spacing]
inline constexpr double kTimes[3][6][4] = {
    {
        {0.0, 0.0, 0.0, 0.0},
        {0.5, 2.0, 4.0, 6.0},
        {1.0, 4.0, 8.0, 12.0},
        {1.5, 6.0, 12.0, 18.0},
        {2.0, 8.0, 16.0, 24.0},
        {2.5, 10.0, 20.0, 30.0},
    },
    {
        {4.0, 4.0, 4.0, 4.0},
        {4.5, 6.0, 8.0, 10.0},
        {5.0, 8.0, 12.0, 16.0},
        {5.5, 10.0, 16.0, 22.0},
        {6.0, 12.0, 20.0, 28.0},
        {6.5, 14.0, 24.0, 34.0},
    },
    {
        {8.0, 8.0, 8.0, 8.0},
        {8.5, 10.0, 12.0, 14.0},
        {9.0, 12.0, 16.0, 20.0},
        {9.5, 14.0, 20.0, 26.0},
        {10.0, 16.0, 24.0, 32.0},
        {10.5, 18.0, 28.0, 38.0},
    },
};

inline constexpr double kObservations[3][6][4] = {
    {
        {0.50000000000000, 0.50000000000000, 0.50000000000000, 0.50000000000000},
        {0.62245933120185, 0.88079707797788, 0.98201379003791, 0.99752737684337},
        {0.73105857863000, 0.98201379003791, 0.99966464986953, 0.99999385582540},
        {0.81757447619364, 0.99752737684337, 0.99999385582540, 0.99999998477002},
        {0.88079707797788, 0.99966464986953, 0.99999988746484, 0.99999999996225},
        {0.92414181997876, 0.99995460213130, 0.99999999793885, 0.99999999999991},
    },
    {
        {0.98201379003791, 0.98201379003791, 0.98201379003791, 0.98201379003791},
        {0.98901305736941, 0.99752737684337, 0.99966464986953, 0.99995460213130},
        {0.99330714907572, 0.99966464986953, 0.99999385582540, 0.99999988746484},
        {0.99592986228410, 0.99995460213130, 0.99999988746484, 0.99999999972105},
        {0.99752737684337, 0.99999385582540, 0.99999999793885, 0.99999999999931},
        {0.99849881774326, 0.99999916847197, 0.99999999996225, 1.00000000000000},
    },
    {
        {0.99966464986953, 0.99966464986953, 0.99966464986953, 0.99966464986953},
        {0.99979657302194, 0.99995460213130, 0.99999385582540, 0.99999916847197},
        {0.99987660542401, 0.99999385582540, 0.99999988746484, 0.99999999793885},
        {0.99992515377249, 0.99999916847197, 0.99999999793885, 0.99999999999489},
        {0.99995460213130, 0.99999988746484, 0.99999999996225, 0.99999999999999},
        {0.99997246430889, 0.99999998477002, 0.99999999999931, 1.00000000000000},
    },
};

struct GridCell {
    int n;
    double t0;
    int k;
    double d_x0;
    double d_alpha;
    double kappa;
    int iterations;  // 0 for one-shot tables
};

struct ModelCell {
    double t0;
    double x0;
    double alpha;
    double d_x0;
    double d_alpha;
    int iterations;
};

inline constexpr std::array<GridCell, 36> kTable3{{
    GridCell{2, 0.0, 1, -0.1000, 0.0761, 2.8e+2, 0},
    GridCell{2, 0.0, 4, -0.1000, 0.0968, 4.1e+1, 0},
    GridCell{2, 0.0, 8, -0.1000, 0.1028, 2.0e+2, 0},
    GridCell{2, 0.0, 12, -0.1000, 0.0989, 3.1e+3, 0},
    GridCell{2, 4.0, 1, -0.0955, 0.0981, 1.3e+3, 0},
    GridCell{2, 4.0, 4, -0.0888, 0.0912, 6.0e+2, 0},
    GridCell{2, 4.0, 8, -0.0809, 0.0829, 5.0e+3, 0},
    GridCell{2, 4.0, 12, -0.0739, 0.0756, 8.1e+4, 0},
    GridCell{2, 8.0, 1, -0.0479, 0.0657, 7.9e+3, 0},
    GridCell{2, 8.0, 4, -0.0390, 0.0611, 3.8e+3, 0},
    GridCell{2, 8.0, 8, -0.0284, 0.0555, 3.2e+4, 0},
    GridCell{2, 8.0, 12, -0.0190, 0.0507, 5.2e+5, 0},
    GridCell{4, 0.0, 1, -0.1006, 0.0892, 7.0e+1, 0},
    GridCell{4, 0.0, 4, -0.1000, 0.0977, 3.5e+1, 0},
    GridCell{4, 0.0, 8, -0.1000, 0.1028, 2.0e+2, 0},
    GridCell{4, 0.0, 12, -0.1000, 0.0989, 3.1e+3, 0},
    GridCell{4, 4.0, 1, -0.1038, 0.0977, 3.9e+2, 0},
    GridCell{4, 4.0, 4, -0.1108, 0.1039, 9.4e+2, 0},
    GridCell{4, 4.0, 8, -0.1477, 0.1349, 5.0e+4, 0},
    GridCell{4, 4.0, 12, 0.4009, -0.0570, 1.5e+5, 0},
    GridCell{4, 8.0, 1, -0.0440, 0.0637, 2.5e+3, 0},
    GridCell{4, 8.0, 4, -0.0378, 0.0605, 3.4e+3, 0},
    GridCell{4, 8.0, 8, -0.0283, 0.0555, 3.2e+4, 0},
    GridCell{4, 8.0, 12, -0.0190, 0.0507, 5.2e+5, 0},
    GridCell{6, 0.0, 1, -0.1011, 0.0951, 4.2e+1, 0},
    GridCell{6, 0.0, 4, -0.1000, 0.0977, 3.5e+1, 0},
    GridCell{6, 0.0, 8, -0.1000, 0.1028, 2.0e+2, 0},
    GridCell{6, 0.0, 12, -0.1000, 0.0989, 3.1e+3, 0},
    GridCell{6, 4.0, 1, -0.0907, 0.0932, 3.0e+2, 0},
    GridCell{6, 4.0, 4, -0.0879, 0.0902, 5.4e+2, 0},
    GridCell{6, 4.0, 8, -0.0808, 0.0828, 5.0e+3, 0},
    GridCell{6, 4.0, 12, -0.0739, 0.0756, 8.1e+4, 0},
    GridCell{6, 8.0, 1, -0.0416, 0.0625, 1.8e+3, 0},
    GridCell{6, 8.0, 4, -0.0378, 0.0605, 3.4e+3, 0},
    GridCell{6, 8.0, 8, -0.0283, 0.0555, 3.2e+4, 0},
    GridCell{6, 8.0, 12, -0.0190, 0.0507, 5.2e+5, 0},
}};

inline constexpr std::array<GridCell, 36> kTable4{{
    GridCell{2, 0.0, 1, -0.1000, 0.1117, 2.1e+2, 0},
    GridCell{2, 0.0, 4, -0.1000, 0.0987, 2.5e+1, 0},
    GridCell{2, 0.0, 8, -0.1000, 0.0945, 1.8e+2, 0},
    GridCell{2, 0.0, 12, -0.1000, 0.0980, 7.1e+3, 0},
    GridCell{2, 4.0, 1, -0.1009, 0.0953, 1.1e+3, 0},
    GridCell{2, 4.0, 4, -0.1098, 0.1030, 9.6e+2, 0},
    GridCell{2, 4.0, 8, -0.1489, 0.1359, 5.1e+4, 0},
    GridCell{2, 4.0, 12, -0.1264, 0.1247, 2.5e+5, 0},
    GridCell{2, 8.0, 1, 0.3763, -0.0528, 8.2e+3, 0},
    GridCell{2, 8.0, 4, 0.3744, -0.0523, 4.7e+3, 0},
    GridCell{2, 8.0, 8, 0.3737, -0.0521, 5.2e+4, 0},
    GridCell{2, 8.0, 12, 0.3749, -0.0524, 1.1e+6, 0},
    GridCell{4, 0.0, 1, -0.0995, 0.1025, 5.4e+1, 0},
    GridCell{4, 0.0, 4, -0.1000, 0.0983, 2.3e+1, 0},
    GridCell{4, 0.0, 8, -0.1000, 0.0945, 1.8e+2, 0},
    GridCell{4, 0.0, 12, -0.1000, 0.0980, 7.1e+3, 0},
    GridCell{4, 4.0, 1, -0.1038, 0.0977, 3.9e+2, 0},
    GridCell{4, 4.0, 4, -0.1108, 0.1039, 9.4e+2, 0},
    GridCell{4, 4.0, 8, -0.1477, 0.1349, 5.0e+4, 0},
    GridCell{4, 4.0, 12, 0.4009, -0.0570, 1.5e+5, 0},
    GridCell{4, 8.0, 1, 0.3754, -0.0525, 2.6e+3, 0},
    GridCell{4, 8.0, 4, 0.3743, -0.0523, 4.3e+3, 0},
    GridCell{4, 8.0, 8, 0.3737, -0.0521, 5.2e+4, 0},
    GridCell{4, 8.0, 12, 0.3749, -0.0524, 1.1e+6, 0},
    GridCell{6, 0.0, 1, -0.0991, 0.0991, 3.3e+1, 0},
    GridCell{6, 0.0, 4, -0.1000, 0.0983, 2.3e+1, 0},
    GridCell{6, 0.0, 8, -0.1000, 0.0945, 1.8e+2, 0},
    GridCell{6, 0.0, 12, -0.1000, 0.0980, 7.1e+3, 0},
    GridCell{6, 4.0, 1, -0.1059, 0.0995, 3.0e+2, 0},
    GridCell{6, 4.0, 4, -0.1108, 0.1039, 9.4e+2, 0},
    GridCell{6, 4.0, 8, -0.1477, 0.1349, 5.0e+4, 0},
    GridCell{6, 4.0, 12, 0.4009, -0.0570, 1.5e+5, 0},
    GridCell{6, 8.0, 1, 0.3750, -0.0524, 1.9e+3, 0},
    GridCell{6, 8.0, 4, 0.3743, -0.0523, 4.3e+3, 0},
    GridCell{6, 8.0, 8, 0.3737, -0.0521, 5.2e+4, 0},
    GridCell{6, 8.0, 12, 0.3749, -0.0524, 1.1e+6, 0},
}};

inline constexpr std::array<GridCell, 36> kTable5{{
    GridCell{2, 0.0, 1, -0.1000, 0.1000, 2.6e+2, 4},
    GridCell{2, 0.0, 4, -0.1000, 0.1000, 3.2e+1, 4},
    GridCell{2, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{2, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{2, 4.0, 1, -0.1000, 0.1000, 1.4e+3, 4},
    GridCell{2, 4.0, 4, -0.1000, 0.1000, 8.7e+2, 4},
    GridCell{2, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 4},
    GridCell{2, 4.0, 12, -0.1000, 0.1000, 2.7e+5, 5},
    GridCell{2, 8.0, 1, -0.1000, 0.1000, 8.6e+3, 5},
    GridCell{2, 8.0, 4, -0.1000, 0.1000, 5.7e+3, 5},
    GridCell{2, 8.0, 8, -0.1000, 0.1000, 7.5e+4, 5},
    GridCell{2, 8.0, 12, -0.1000, 0.1000, 1.8e+6, 5},
    GridCell{4, 0.0, 1, -0.1000, 0.1000, 6.3e+1, 4},
    GridCell{4, 0.0, 4, -0.1000, 0.1000, 2.9e+1, 4},
    GridCell{4, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{4, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{4, 4.0, 1, -0.1000, 0.1000, 4.6e+2, 4},
    GridCell{4, 4.0, 4, -0.1000, 0.1000, 8.1e+2, 4},
    GridCell{4, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 4},
    GridCell{4, 4.0, 12, -0.1000, 0.1000, 2.7e+5, 5},
    GridCell{4, 8.0, 1, -0.1000, 0.1000, 2.9e+3, 5},
    GridCell{4, 8.0, 4, -0.1000, 0.1000, 5.3e+3, 5},
    GridCell{4, 8.0, 8, -0.1000, 0.1000, 7.4e+4, 5},
    GridCell{4, 8.0, 12, -0.1000, 0.1000, 1.8e+6, 5},
    GridCell{6, 0.0, 1, -0.1000, 0.1000, 3.9e+1, 4},
    GridCell{6, 0.0, 4, -0.1000, 0.1000, 2.9e+1, 4},
    GridCell{6, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{6, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{6, 4.0, 1, -0.1000, 0.1000, 3.5e+2, 4},
    GridCell{6, 4.0, 4, -0.1000, 0.1000, 8.1e+2, 4},
    GridCell{6, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 4},
    GridCell{6, 4.0, 12, -0.1000, 0.1000, 2.7e+5, 5},
    GridCell{6, 8.0, 1, -0.1000, 0.1000, 2.2e+3, 5},
    GridCell{6, 8.0, 4, -0.1000, 0.1000, 5.3e+3, 5},
    GridCell{6, 8.0, 8, -0.1000, 0.1000, 7.4e+4, 5},
    GridCell{6, 8.0, 12, -0.1000, 0.1000, 1.8e+6, 5},
}};

inline constexpr std::array<GridCell, 36> kTable6{{
    GridCell{2, 0.0, 1, -0.1000, 0.1000, 2.6e+2, 4},
    GridCell{2, 0.0, 4, -0.1000, 0.1000, 3.2e+1, 4},
    GridCell{2, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{2, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{2, 4.0, 1, -0.1000, 0.1000, 1.4e+3, 4},
    GridCell{2, 4.0, 4, -0.1000, 0.1000, 8.7e+2, 4},
    GridCell{2, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 5},
    GridCell{2, 4.0, 12, -0.1000, 0.1000, 2.7e+5, 6},
    GridCell{2, 8.0, 1, -0.1000, 0.1000, 8.6e+3, 6},
    GridCell{2, 8.0, 4, -0.1000, 0.1000, 5.7e+3, 5},
    GridCell{2, 8.0, 8, -0.1000, 0.1000, 7.5e+4, 5},
    GridCell{2, 8.0, 12, kNaN, kNaN, 1.0e+9, 10},
    GridCell{4, 0.0, 1, -0.1000, 0.1000, 6.3e+1, 4},
    GridCell{4, 0.0, 4, -0.1000, 0.1000, 2.9e+1, 4},
    GridCell{4, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{4, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{4, 4.0, 1, -0.1000, 0.1000, 4.6e+2, 4},
    GridCell{4, 4.0, 4, -0.1000, 0.1000, 8.1e+2, 4},
    GridCell{4, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 5},
    GridCell{4, 4.0, 12, -0.0868, 0.1023, 2.4e+5, 10},
    GridCell{4, 8.0, 1, -0.1000, 0.1000, 2.9e+3, 7},
    GridCell{4, 8.0, 4, -0.1000, 0.1000, 5.3e+3, 7},
    GridCell{4, 8.0, 8, -0.1000, 0.1000, 7.4e+4, 6},
    GridCell{4, 8.0, 12, -0.1000, 0.1000, 1.8e+6, 6},
    GridCell{6, 0.0, 1, -0.1000, 0.1000, 3.9e+1, 3},
    GridCell{6, 0.0, 4, -0.1000, 0.1000, 2.9e+1, 4},
    GridCell{6, 0.0, 8, -0.1000, 0.1000, 2.0e+2, 4},
    GridCell{6, 0.0, 12, -0.1000, 0.1000, 4.6e+3, 4},
    GridCell{6, 4.0, 1, -0.1000, 0.1000, 3.5e+2, 4},
    GridCell{6, 4.0, 4, -0.1000, 0.1000, 8.1e+2, 4},
    GridCell{6, 4.0, 8, -0.1000, 0.1000, 1.1e+4, 5},
    GridCell{6, 4.0, 12, kNaN, kNaN, 1.0e+12, 10},
    GridCell{6, 8.0, 1, -0.1000, 0.1000, 2.2e+3, 7},
    GridCell{6, 8.0, 4, -0.1000, 0.1000, 5.3e+3, 7},
    GridCell{6, 8.0, 8, -0.1000, 0.1000, 7.4e+4, 6},
    GridCell{6, 8.0, 12, kNaN, kNaN, 7.2e+12, 10},
}};

inline constexpr std::array<ModelCell, 48> kTable7{{
    ModelCell{0.0, 0.3, 0.8, 0.2000, 0.2000, 5},
    ModelCell{0.0, 0.3, 0.9, 0.2000, 0.1000, 5},
    ModelCell{0.0, 0.3, 1.1, 0.2000, -0.1000, 5},
    ModelCell{0.0, 0.3, 1.2, 0.2000, -0.2000, 5},
    ModelCell{0.0, 0.4, 0.8, 0.1000, 0.2000, 5},
    ModelCell{0.0, 0.4, 1.1, 0.1000, -0.1000, 4},
    ModelCell{0.0, 0.4, 0.9, 0.1000, 0.1000, 4},
    ModelCell{0.0, 0.4, 1.2, 0.1000, -0.2000, 4},
    ModelCell{0.0, 0.6, 0.8, -0.1000, 0.2000, 4},
    ModelCell{0.0, 0.6, 0.9, -0.1000, 0.1000, 4},
    ModelCell{0.0, 0.6, 1.1, -0.1000, -0.1000, 5},
    ModelCell{0.0, 0.6, 1.2, -0.1000, -0.2000, 5},
    ModelCell{0.0, 0.7, 0.8, -0.2000, 0.2000, 4},
    ModelCell{0.0, 0.7, 0.9, -0.2000, 0.1000, 5},
    ModelCell{0.0, 0.7, 1.1, -0.2000, -0.1000, 5},
    ModelCell{0.0, 0.7, 1.2, -0.2000, -0.2000, 5},
    ModelCell{4.0, 0.3, 0.8, 0.2000, 0.2000, 7},
    ModelCell{4.0, 0.3, 0.9, 0.2000, 0.1000, 6},
    ModelCell{4.0, 0.3, 1.1, 0.2000, -0.1000, 5},
    ModelCell{4.0, 0.3, 1.2, 0.2000, -0.2000, 5},
    ModelCell{4.0, 0.4, 1.1, 0.1000, -0.1000, 4},
    ModelCell{4.0, 0.4, 1.2, 0.1000, -0.2000, 5},
    ModelCell{4.0, 0.4, 0.8, 0.1000, 0.2000, 6},
    ModelCell{4.0, 0.4, 0.9, 0.1000, 0.1000, 5},
    ModelCell{4.0, 0.6, 0.8, -0.1000, 0.2000, 5},
    ModelCell{4.0, 0.6, 0.9, -0.1000, 0.1000, 4},
    ModelCell{4.0, 0.6, 1.1, -0.1000, -0.1000, 6},
    ModelCell{4.0, 0.6, 1.2, -0.1000, -0.2000, 8},
    ModelCell{4.0, 0.7, 0.8, -0.2000, 0.2000, 5},
    ModelCell{4.0, 0.7, 0.9, -0.2000, 0.1000, 5},
    ModelCell{4.0, 0.7, 1.1, -0.2000, -0.1000, 7},
    ModelCell{4.0, 0.7, 1.2, -0.2000, -0.2000, 10},
    ModelCell{8.0, 0.3, 0.8, 0.2000, 0.2000, 7},
    ModelCell{8.0, 0.3, 1.1, 0.2000, -0.1000, 5},
    ModelCell{8.0, 0.3, 0.9, 0.2000, 0.1000, 7},
    ModelCell{8.0, 0.3, 1.2, 0.2000, -0.2000, 7},
    ModelCell{8.0, 0.4, 0.8, 0.1000, 0.2000, 7},
    ModelCell{8.0, 0.4, 0.9, 0.1000, 0.1000, 6},
    ModelCell{8.0, 0.4, 1.1, 0.1000, -0.1000, 5},
    ModelCell{8.0, 0.4, 1.2, 0.1000, -0.2000, 11},
    ModelCell{8.0, 0.6, 0.8, -0.1000, 0.2000, 6},
    ModelCell{8.0, 0.6, 1.1, -0.1000, -0.1000, 6},
    ModelCell{8.0, 0.6, 1.2, kNaN, kNaN, 100},
    ModelCell{8.0, 0.6, 0.9, -0.1000, 0.1000, 5},
    ModelCell{8.0, 0.7, 1.1, -0.2000, -0.1000, 9},
    ModelCell{8.0, 0.7, 1.2, kNaN, kNaN, 100},
    ModelCell{8.0, 0.7, 0.8, -0.2000, 0.2000, 6},
    ModelCell{8.0, 0.7, 0.9, -0.2000, 0.1000, 5},
}};

inline constexpr std::array<ModelCell, 48> kTable8{{
    ModelCell{0.0, 0.3, 0.8, 0.2000, 0.2000, 5},
    ModelCell{0.0, 0.3, 0.9, 0.2000, 0.1000, 5},
    ModelCell{0.0, 0.3, 1.1, 0.2000, -0.1000, 5},
    ModelCell{0.0, 0.3, 1.2, 0.2000, -0.2000, 5},
    ModelCell{0.0, 0.4, 0.8, 0.1000, 0.2000, 5},
    ModelCell{0.0, 0.4, 0.9, 0.1000, 0.1000, 5},
    ModelCell{0.0, 0.4, 1.1, 0.1000, -0.1000, 4},
    ModelCell{0.0, 0.4, 1.2, 0.1000, -0.2000, 4},
    ModelCell{0.0, 0.6, 0.8, -0.1000, 0.2000, 4},
    ModelCell{0.0, 0.6, 0.9, -0.1000, 0.1000, 4},
    ModelCell{0.0, 0.6, 1.1, -0.1000, -0.1000, 4},
    ModelCell{0.0, 0.6, 1.2, -0.1000, -0.2000, 4},
    ModelCell{0.0, 0.7, 0.8, -0.2000, 0.2000, 4},
    ModelCell{0.0, 0.7, 0.9, -0.2000, 0.1000, 4},
    ModelCell{0.0, 0.7, 1.1, -0.2000, -0.1000, 5},
    ModelCell{0.0, 0.7, 1.2, -0.2000, -0.2000, 5},
    ModelCell{4.0, 0.3, 0.8, kNaN, kNaN, 101},
    ModelCell{4.0, 0.3, 0.9, 0.2000, 0.1000, 5},
    ModelCell{4.0, 0.3, 1.1, 0.2000, -0.1000, 5},
    ModelCell{4.0, 0.3, 1.2, 0.2000, -0.2000, 7},
    ModelCell{4.0, 0.4, 0.8, 0.1000, 0.2000, 7},
    ModelCell{4.0, 0.4, 0.9, kNaN, kNaN, 100},
    ModelCell{4.0, 0.4, 1.1, 0.1000, -0.1000, 4},
    ModelCell{4.0, 0.4, 1.2, 0.1000, -0.2000, 5},
    ModelCell{4.0, 0.6, 0.8, -0.1000, 0.2000, 7},
    ModelCell{4.0, 0.6, 0.9, -0.1000, 0.1000, 4},
    ModelCell{4.0, 0.6, 1.1, -0.1000, -0.1000, 5},
    ModelCell{4.0, 0.6, 1.2, -0.1000, -0.2000, 5},
    ModelCell{4.0, 0.7, 0.8, -0.2000, 0.2000, 5},
    ModelCell{4.0, 0.7, 0.9, -0.2000, 0.1000, 4},
    ModelCell{4.0, 0.7, 1.1, -0.2000, -0.1000, 5},
    ModelCell{4.0, 0.7, 1.2, -0.2000, -0.2000, 5},
    ModelCell{8.0, 0.3, 0.8, kNaN, kNaN, 100},
    ModelCell{8.0, 0.3, 1.1, 0.2000, -0.1000, 6},
    ModelCell{8.0, 0.3, 1.2, 0.2000, -0.2000, 5},
    ModelCell{8.0, 0.3, 0.9, 0.2000, 0.1000, 16},
    ModelCell{8.0, 0.4, 0.8, kNaN, kNaN, 100},
    ModelCell{8.0, 0.4, 0.9, kNaN, kNaN, 100},
    ModelCell{8.0, 0.4, 1.1, 0.1000, -0.1000, 5},
    ModelCell{8.0, 0.4, 1.2, 0.1000, -0.2000, 4},
    ModelCell{8.0, 0.6, 0.8, kNaN, kNaN, 100},
    ModelCell{8.0, 0.6, 0.9, -0.1000, 0.1000, 7},
    ModelCell{8.0, 0.6, 1.1, -0.1000, -0.1000, 5},
    ModelCell{8.0, 0.6, 1.2, -0.1000, -0.2000, 6},
    ModelCell{8.0, 0.7, 0.8, -0.2000, 0.2000, 12},
    ModelCell{8.0, 0.7, 0.9, -0.2000, 0.1000, 5},
    ModelCell{8.0, 0.7, 1.1, -0.2000, -0.1000, 5},
    ModelCell{8.0, 0.7, 1.2, -0.2000, -0.2000, 9},
}};

}  // namespace ref
