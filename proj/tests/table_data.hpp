// Reference data for the L=8 benchmark runs at G = 1/2 + 1e-7, eps_j = j/10.
// Roots are the Moebius-transformed variables v_j as printed (5 or 8 decimals).
// Generated by extract_tables.py; do not edit by hand.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace refdata {

struct RefRow {
  double energy;
  std::vector<std::complex<double>> roots_v;
};

inline const std::array<RefRow, 56> kTable1 = {{
    {-7.54299, {{0.99997, 0.0}, {1.00003, 0.0}, {1.49644, 0.0}}},
    {1.94946, {{0.1303, 0.0}, {0.99994, 0.0}, {1.00006, 0.0}}},
    {2.44011, {{0.2386, 0.0}, {0.99994, 0.0}, {1.00006, 0.0}}},
    {3.0838, {{0.34552, 0.0}, {0.99994, 0.0}, {1.00006, 0.0}}},
    {3.97611, {{0.45217, 0.0}, {0.99994, 0.0}, {1.00006, 0.0}}},
    {5.30314, {{0.55903, 0.0}, {0.99993, 0.0}, {1.00007, 0.0}}},
    {7.49744, {{0.66657, 0.0}, {0.99992, 0.0}, {1.00008, 0.0}}},
    {11.87227, {{0.77566, 0.0}, {0.99989, 0.0}, {1.00011, 0.0}}},
    {12.52145, {{0.18033, 0.0}, {0.212, 0.0}, {0.93364, 0.0}}},
    {12.64936, {{0.13716, 0.0}, {0.33338, 0.0}, {0.9323, 0.0}}},
    {12.8363, {{0.93013, 0.0}, {0.31915, 0.0317}, {0.31915, -0.0317}}},
    {12.87624, {{0.1338, 0.0}, {0.44202, 0.0}, {0.92986, 0.0}}},
    {12.98062, {{0.24692, 0.0}, {0.43819, 0.0}, {0.92852, 0.0}}},
    {13.24971, {{0.13239, 0.0}, {0.55018, 0.0}, {0.92567, 0.0}}},
    {13.31567, {{0.92413, 0.0}, {0.44485, 0.04048}, {0.44485, -0.04048}}},
    {13.3451, {{0.24279, 0.0}, {0.5483, 0.0}, {0.92424, 0.0}}},
    {13.47474, {{0.35396, 0.0}, {0.5441, 0.0}, {0.92226, 0.0}}},
    {13.9973, {{0.13162, 0.0}, {0.6594, 0.0}, {0.91663, 0.0}}},
    {14.07798, {{0.24104, 0.0}, {0.65843, 0.0}, {0.91494, 0.0}}},
    {14.16919, {{0.91099, 0.0}, {0.57513, 0.03533}, {0.57513, -0.03533}}},
    {14.18711, {{0.34973, 0.0}, {0.6567, 0.0}, {0.9126, 0.0}}},
    {14.34237, {{0.45985, 0.0}, {0.65262, 0.0}, {0.90915, 0.0}}},
    {17.62521, {{0.13125, 0.0}, {0.77844, 0.0}, {0.85271, 0.0}}},
    {17.77665, {{0.2403, 0.0}, {0.77968, 0.0}, {0.8449, 0.0}}},
    {18.00125, {{0.34831, 0.0}, {0.78269, 0.0}, {0.83171, 0.0}}},
    {18.38397, {{0.45676, 0.0}, {0.79787, 0.01289}, {0.79787, -0.01289}}},
    {19.32412, {{0.56759, 0.0}, {0.77091, 0.04229}, {0.77091, -0.04229}}},
    {20.41664, {{0.67105, 0.0}, {0.73644, 0.10065}, {0.73644, -0.10065}}},
    {22.36145, {{0.3554, 0.0}, {0.54943, 0.0}, {0.74665, 0.0}}},
    {22.43743, {{0.74865, 0.0}, {0.45717, 0.04099}, {0.45717, -0.04099}}},
    {22.55229, {{0.24377, 0.0}, {0.5537, 0.0}, {0.74773, 0.0}}},
    {22.70038, {{0.13294, 0.0}, {0.55556, 0.0}, {0.74847, 0.0}}},
    {22.92889, {{0.24797, 0.0}, {0.44046, 0.0}, {0.75208, 0.0}}},
    {23.05279, {{0.3536, 0.0}, {0.63967, 0.04101}, {0.63967, -0.04101}}},
    {23.07422, {{0.75333, 0.0}, {0.32407, 0.03481}, {0.32407, -0.03481}}},
    {23.07834, {{0.13439, 0.0}, {0.44448, 0.0}, {0.75282, 0.0}}},
    {23.12185, {{0.24304, 0.0}, {0.65007, 0.04141}, {0.65007, -0.04141}}},
    {23.20321, {{0.13263, 0.0}, {0.65541, 0.04094}, {0.65541, -0.04094}}},
    {23.33978, {{0.13784, 0.0}, {0.33456, 0.0}, {0.75472, 0.0}}},
    {23.34662, {{0.48232, 0.0}, {0.532, 0.0}, {0.62467, 0.0}}},
    {23.49317, {{0.18649, 0.0}, {0.20946, 0.0}, {0.75562, 0.0}}},
    {23.78106, {{0.54736, 0.0}, {0.54021, 0.1161}, {0.54021, -0.1161}}},
    {24.17544, {{0.24905, 0.0}, {0.44448, 0.0}, {0.63927, 0.0}}},
    {24.30757, {{0.64194, 0.0}, {0.33081, 0.03821}, {0.33081, -0.03821}}},
    {24.32987, {{0.13496, 0.0}, {0.44873, 0.0}, {0.64022, 0.0}}},
    {24.60177, {{0.1385, 0.0}, {0.33606, 0.0}, {0.64421, 0.0}}},
    {24.6337, {{0.24842, 0.0}, {0.51582, 0.02981}, {0.51582, -0.02981}}},
    {24.73161, {{0.13481, 0.0}, {0.52553, 0.03537}, {0.52553, -0.03537}}},
    {24.75667, {{0.19766, 0.0}, {0.20219, 0.0}, {0.64576, 0.0}}},
    {24.87852, {{0.53021, 0.0}, {0.35199, 0.04392}, {0.35199, -0.04392}}},
    {25.1888, {{0.42933, 0.0}, {0.37736, 0.09555}, {0.37736, -0.09555}}},
    {25.25408, {{0.13948, 0.0}, {0.33963, 0.0}, {0.53465, 0.0}}},
    {25.40724, {{0.53757, 0.0}, {0.20335, 0.01472}, {0.20335, -0.01472}}},
    {25.579, {{0.13973, 0.0}, {0.40092, 0.00763}, {0.40092, -0.00763}}},
    {25.79494, {{0.42898, 0.0}, {0.21141, 0.02721}, {0.21141, -0.02721}}},
    {26.03673, {{0.31998, 0.0}, {0.22656, 0.05659}, {0.22656, -0.05659}}},
}};

inline const std::array<RefRow, 28> kTable2 = {{
    {-11.83981209, {{-0.99999981, 0.00024393}, {-0.99999981, -0.00024393}, {0.99997107, 0.0}, {1.00002897, 0.0}, {1.35407523, 0.0}, {9.17378076, 0.0}}},
    {-3.65796172, {{-0.99999946, 0.00057037}, {-0.99999946, -0.00057037}, {0.99996003, 0.0}, {1.00004003, 0.0}, {1.72872448, 0.0}, {0.13265362, 0.0}}},
    {-2.8000872, {{-0.99999953, 0.00050626}, {-0.99999953, -0.00050626}, {0.9999584, 0.0}, {1.00004166, 0.0}, {1.79893201, 0.0}, {0.24145319, 0.0}}},
    {-1.7499209, {{-0.99999959, 0.00045582}, {-0.99999959, -0.00045582}, {0.99995624, 0.0}, {1.00004382, 0.0}, {1.89428154, 0.0}, {0.34849627, 0.0}}},
    {-0.41519412, {{-0.99999963, 0.00041512}, {-0.99999963, -0.00041512}, {0.9999532, 0.0}, {1.00004686, 0.0}, {2.02752239, 0.0}, {0.45498685, 0.0}}},
    {1.37437992, {{-0.99999967, 0.00038118}, {-0.99999967, -0.00038118}, {0.99994857, 0.0}, {1.00005151, 0.0}, {2.21634859, 0.0}, {0.56145363, 0.0}}},
    {4.02553678, {{-0.9999997, 0.00035212}, {-0.9999997, -0.00035212}, {0.99994039, 0.0}, {1.00005969, 0.0}, {2.48406296, 0.0}, {0.668399, 0.0}}},
    {4.55935661, {{-0.99999662, 0.00199582}, {-0.99999662, -0.00199582}, {0.99993382, 0.0}, {1.00006628, 0.0}, {0.20680832, 0.02043937}, {0.20680832, -0.02043937}}},
    {5.01704811, {{-0.99999709, 0.00178555}, {-0.99999709, -0.00178555}, {0.99993146, 0.0}, {1.00006865, 0.0}, {0.14110366, 0.0}, {0.33689835, 0.0}}},
    {5.8993752, {{-0.99999774, 0.00148867}, {-0.99999774, -0.00148867}, {0.99992647, 0.0}, {1.00007365, 0.0}, {0.13730723, 0.0}, {0.44668753, 0.0}}},
    {6.0165712, {{-0.99999807, 0.0012824}, {-0.99999807, -0.0012824}, {0.9999255, 0.0}, {1.00007462, 0.0}, {0.33690194, 0.03941953}, {0.33690194, -0.03941953}}},
    {6.38806868, {{-0.99999819, 0.00123967}, {-0.99999819, -0.00123967}, {0.99992318, 0.0}, {1.00007694, 0.0}, {0.25126848, 0.0}, {0.44251302, 0.0}}},
    {7.21930929, {{-0.99999827, 0.00124763}, {-0.99999827, -0.00124763}, {0.9999178, 0.0}, {1.00008233, 0.0}, {0.13570667, 0.0}, {0.55544129, 0.0}}},
    {7.70384297, {{-0.99999861, 0.00104596}, {-0.99999861, -0.00104596}, {0.99991363, 0.0}, {1.00008651, 0.0}, {0.24697377, 0.0}, {0.55356595, 0.0}}},
    {8.18565261, {{-0.99999896, 0.0008494}, {-0.99999896, -0.0008494}, {0.9999085, 0.0}, {1.00009165, 0.0}, {0.46637678, 0.03850363}, {0.46637678, -0.03850363}}},
    {8.33050601, {{-0.9999989, 0.00088637}, {-0.9999989, -0.00088637}, {0.99990761, 0.0}, {1.00009255, 0.0}, {0.35820837, 0.0}, {0.54928501, 0.0}}},
    {8.82488231, {{-0.99999973, 0.00032685}, {-0.99999973, -0.00032685}, {0.99992267, 0.0}, {1.00007744, 0.0}, {2.86124262, 0.0}, {0.77673107, 0.0}}},
    {9.4056661, {{-0.99999862, 0.00107506}, {-0.99999862, -0.00107506}, {0.9998998, 0.0}, {1.00010037, 0.0}, {0.13481277, 0.0}, {0.66436225, 0.0}}},
    {9.88812763, {{-0.99999887, 0.00091253}, {-0.99999887, -0.00091253}, {0.9998934, 0.0}, {1.00010678, 0.0}, {0.24509789, 0.0}, {0.6634546, 0.0}}},
    {10.51623429, {{-0.99999908, 0.00078718}, {-0.99999908, -0.00078718}, {0.99988379, 0.0}, {1.00011642, 0.0}, {0.35409601, 0.0}, {0.66184154, 0.0}}},
    {11.36752125, {{-0.99999923, 0.00069725}, {-0.99999923, -0.00069725}, {0.99986777, 0.0}, {1.00013248, 0.0}, {0.46378746, 0.0}, {0.65803096, 0.0}}},
    {11.72101631, {{-0.9999993, 0.00065253}, {-0.9999993, -0.00065253}, {0.99985675, 0.0}, {1.00014354, 0.0}, {0.59339982, 0.01996575}, {0.59339982, -0.01996575}}},
    {13.77136379, {{-0.99999885, 0.00095049}, {-0.99999885, -0.00095049}, {0.99985955, 0.0}, {1.00014067, 0.0}, {0.13423675, 0.0}, {0.7745414, 0.0}}},
    {14.25217295, {{-0.99999905, 0.00081659}, {-0.99999905, -0.00081659}, {0.99984872, 0.0}, {1.00015152, 0.0}, {0.24402831, 0.0}, {0.77416049, 0.0}}},
    {14.88038709, {{-0.99999921, 0.00071424}, {-0.99999921, -0.00071424}, {0.99983265, 0.0}, {1.00016762, 0.0}, {0.35222296, 0.0}, {0.7735706, 0.0}}},
    {15.74513536, {{-0.99999932, 0.00063925}, {-0.99999932, -0.00063925}, {0.99980693, 0.0}, {1.00019339, 0.0}, {0.46018824, 0.0}, {0.77251429, 0.0}}},
    {17.00197794, {{-0.9999994, 0.00058367}, {-0.9999994, -0.00058367}, {0.9997658, 0.0}, {1.00023458, 0.0}, {0.56880755, 0.0}, {0.77001849, 0.0}}},
    {18.42439918, {{-0.99999946, 0.00054548}, {-0.99999946, -0.00054548}, {0.99971075, 0.0}, {1.00028967, 0.0}, {0.68228619, 0.0}, {0.74962317, 0.0}}},
}};

}  // namespace refdata
