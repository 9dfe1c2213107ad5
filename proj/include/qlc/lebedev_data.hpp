#pragma once

// Lebedev-Laikov node/weight tables for the unit sphere, generated offline
// from the standard published node sets and frozen here. Weights sum to 4*pi.

#include <cstddef>

namespace qlc::detail {

struct LebedevTable {
  int exactness;
  std::size_t size;
  const double* xyzw;  // size rows of {x, y, z, w}
};

inline constexpr double kLebedev11[200] = {
    1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.59572960182338713e-01,
    -1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.59572960182338713e-01,
    0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, 1.59572960182338713e-01,
    0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 1.59572960182338713e-01,
    0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 1.59572960182338713e-01,
    0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 1.59572960182338713e-01,
    0.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547573e-01, 2.83685262546379879e-01,
    0.00000000000000000e+00, -7.07106781186547573e-01, 7.07106781186547573e-01, 2.83685262546379879e-01,
    0.00000000000000000e+00, 7.07106781186547573e-01, -7.07106781186547573e-01, 2.83685262546379879e-01,
    0.00000000000000000e+00, -7.07106781186547573e-01, -7.07106781186547573e-01, 2.83685262546379879e-01,
    7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 2.83685262546379879e-01,
    7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 2.83685262546379879e-01,
    -7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 2.83685262546379879e-01,
    -7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 2.83685262546379879e-01,
    7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 2.83685262546379879e-01,
    -7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 2.83685262546379879e-01,
    7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 2.83685262546379879e-01,
    -7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 2.83685262546379879e-01,
    5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 2.65071880146638794e-01,
    -5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 2.65071880146638794e-01,
    5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 2.65071880146638794e-01,
    5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 2.65071880146638794e-01,
    -5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 2.65071880146638794e-01,
    5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 2.65071880146638794e-01,
    -5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 2.65071880146638794e-01,
    -5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 2.65071880146638794e-01,
    3.01511344577763574e-01, 3.01511344577763574e-01, 9.04534033733290888e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, 3.01511344577763574e-01, 9.04534033733290888e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, -3.01511344577763574e-01, 9.04534033733290888e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, 3.01511344577763574e-01, -9.04534033733290888e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, -3.01511344577763574e-01, 9.04534033733290888e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, 3.01511344577763574e-01, -9.04534033733290888e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, -3.01511344577763574e-01, -9.04534033733290888e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, -3.01511344577763574e-01, -9.04534033733290888e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, 9.04534033733290888e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, -9.04534033733290888e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, 9.04534033733290888e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, -9.04534033733290888e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, 9.04534033733290888e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, -9.04534033733290888e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    -3.01511344577763574e-01, -9.04534033733290888e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    3.01511344577763574e-01, 9.04534033733290888e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    9.04534033733290888e-01, 3.01511344577763574e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    -9.04534033733290888e-01, 3.01511344577763574e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    9.04534033733290888e-01, -3.01511344577763574e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    9.04534033733290888e-01, 3.01511344577763574e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    -9.04534033733290888e-01, -3.01511344577763574e-01, 3.01511344577763574e-01, 2.53505610897311273e-01,
    -9.04534033733290888e-01, 3.01511344577763574e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    9.04534033733290888e-01, -3.01511344577763574e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
    -9.04534033733290888e-01, -3.01511344577763574e-01, -3.01511344577763574e-01, 2.53505610897311273e-01,
};

inline constexpr double kLebedev17[440] = {
    1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.81074658513965941e-02,
    -1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.81074658513965941e-02,
    0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, 4.81074658513965941e-02,
    0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 4.81074658513965941e-02,
    0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 4.81074658513965941e-02,
    0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 4.81074658513965941e-02,
    5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 1.23071735281670175e-01,
    -5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 1.23071735281670175e-01,
    5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 1.23071735281670175e-01,
    5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 1.23071735281670175e-01,
    -5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 1.23071735281670175e-01,
    5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 1.23071735281670175e-01,
    -5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 1.23071735281670175e-01,
    -5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 1.23071735281670175e-01,
    1.85115635344736212e-01, 1.85115635344736212e-01, 9.65124035086594056e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, 1.85115635344736212e-01, 9.65124035086594056e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, -1.85115635344736212e-01, 9.65124035086594056e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, 1.85115635344736212e-01, -9.65124035086594056e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, -1.85115635344736212e-01, 9.65124035086594056e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, 1.85115635344736212e-01, -9.65124035086594056e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, -1.85115635344736212e-01, -9.65124035086594056e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, -1.85115635344736212e-01, -9.65124035086594056e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, 9.65124035086594056e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, -9.65124035086594056e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, 9.65124035086594056e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, -9.65124035086594056e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, 9.65124035086594056e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, -9.65124035086594056e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    -1.85115635344736212e-01, -9.65124035086594056e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    1.85115635344736212e-01, 9.65124035086594056e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    9.65124035086594056e-01, 1.85115635344736212e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    -9.65124035086594056e-01, 1.85115635344736212e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    9.65124035086594056e-01, -1.85115635344736212e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    9.65124035086594056e-01, 1.85115635344736212e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    -9.65124035086594056e-01, -1.85115635344736212e-01, 1.85115635344736212e-01, 1.03191734088330406e-01,
    -9.65124035086594056e-01, 1.85115635344736212e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    9.65124035086594056e-01, -1.85115635344736212e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    -9.65124035086594056e-01, -1.85115635344736212e-01, -1.85115635344736212e-01, 1.03191734088330406e-01,
    6.90421048382292235e-01, 6.90421048382292235e-01, 2.15957291845848443e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, 6.90421048382292235e-01, 2.15957291845848443e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, -6.90421048382292235e-01, 2.15957291845848443e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, 6.90421048382292235e-01, -2.15957291845848443e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, -6.90421048382292235e-01, 2.15957291845848443e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, 6.90421048382292235e-01, -2.15957291845848443e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, -6.90421048382292235e-01, -2.15957291845848443e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, -6.90421048382292235e-01, -2.15957291845848443e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, 2.15957291845848443e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, -2.15957291845848443e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, 2.15957291845848443e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, -2.15957291845848443e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, 2.15957291845848443e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, -2.15957291845848443e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    -6.90421048382292235e-01, -2.15957291845848443e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    6.90421048382292235e-01, 2.15957291845848443e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    2.15957291845848443e-01, 6.90421048382292235e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    -2.15957291845848443e-01, 6.90421048382292235e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    2.15957291845848443e-01, -6.90421048382292235e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    2.15957291845848443e-01, 6.90421048382292235e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    -2.15957291845848443e-01, -6.90421048382292235e-01, 6.90421048382292235e-01, 1.24945096872513303e-01,
    -2.15957291845848443e-01, 6.90421048382292235e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    2.15957291845848443e-01, -6.90421048382292235e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    -2.15957291845848443e-01, -6.90421048382292235e-01, -6.90421048382292235e-01, 1.24945096872513303e-01,
    3.95689473055941876e-01, 3.95689473055941876e-01, 8.28769981252592269e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, 3.95689473055941876e-01, 8.28769981252592269e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, -3.95689473055941876e-01, 8.28769981252592269e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, 3.95689473055941876e-01, -8.28769981252592269e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, -3.95689473055941876e-01, 8.28769981252592269e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, 3.95689473055941876e-01, -8.28769981252592269e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, -3.95689473055941876e-01, -8.28769981252592269e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, -3.95689473055941876e-01, -8.28769981252592269e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, 8.28769981252592269e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, -8.28769981252592269e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, 8.28769981252592269e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, -8.28769981252592269e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, 8.28769981252592269e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, -8.28769981252592269e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    -3.95689473055941876e-01, -8.28769981252592269e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    3.95689473055941876e-01, 8.28769981252592269e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    8.28769981252592269e-01, 3.95689473055941876e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    -8.28769981252592269e-01, 3.95689473055941876e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    8.28769981252592269e-01, -3.95689473055941876e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    8.28769981252592269e-01, 3.95689473055941876e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    -8.28769981252592269e-01, -3.95689473055941876e-01, 3.95689473055941876e-01, 1.20580249028527889e-01,
    -8.28769981252592269e-01, 3.95689473055941876e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    8.28769981252592269e-01, -3.95689473055941876e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    -8.28769981252592269e-01, -3.95689473055941876e-01, -3.95689473055941876e-01, 1.20580249028527889e-01,
    4.78369028812150210e-01, 8.78158910604066145e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    -4.78369028812150210e-01, 8.78158910604066145e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    4.78369028812150210e-01, -8.78158910604066145e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    -4.78369028812150210e-01, -8.78158910604066145e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    8.78158910604066145e-01, 4.78369028812150210e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    -8.78158910604066145e-01, 4.78369028812150210e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    8.78158910604066145e-01, -4.78369028812150210e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    -8.78158910604066145e-01, -4.78369028812150210e-01, 0.00000000000000000e+00, 1.21830917385521376e-01,
    4.78369028812150210e-01, 0.00000000000000000e+00, 8.78158910604066145e-01, 1.21830917385521376e-01,
    -4.78369028812150210e-01, 0.00000000000000000e+00, 8.78158910604066145e-01, 1.21830917385521376e-01,
    4.78369028812150210e-01, 0.00000000000000000e+00, -8.78158910604066145e-01, 1.21830917385521376e-01,
    -4.78369028812150210e-01, 0.00000000000000000e+00, -8.78158910604066145e-01, 1.21830917385521376e-01,
    8.78158910604066145e-01, 0.00000000000000000e+00, 4.78369028812150210e-01, 1.21830917385521376e-01,
    -8.78158910604066145e-01, 0.00000000000000000e+00, 4.78369028812150210e-01, 1.21830917385521376e-01,
    8.78158910604066145e-01, 0.00000000000000000e+00, -4.78369028812150210e-01, 1.21830917385521376e-01,
    -8.78158910604066145e-01, 0.00000000000000000e+00, -4.78369028812150210e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, 4.78369028812150210e-01, 8.78158910604066145e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, -4.78369028812150210e-01, 8.78158910604066145e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, 4.78369028812150210e-01, -8.78158910604066145e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, -4.78369028812150210e-01, -8.78158910604066145e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, 8.78158910604066145e-01, 4.78369028812150210e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, -8.78158910604066145e-01, 4.78369028812150210e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, 8.78158910604066145e-01, -4.78369028812150210e-01, 1.21830917385521376e-01,
    0.00000000000000000e+00, -8.78158910604066145e-01, -4.78369028812150210e-01, 1.21830917385521376e-01,
};

inline constexpr double kLebedev23[776] = {
    1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.23975506210384659e-02,
    -1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.23975506210384659e-02,
    0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, 2.23975506210384659e-02,
    0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 2.23975506210384659e-02,
    0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 2.23975506210384659e-02,
    0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 2.23975506210384659e-02,
    0.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547573e-01, 7.18407589348473569e-02,
    0.00000000000000000e+00, -7.07106781186547573e-01, 7.07106781186547573e-01, 7.18407589348473569e-02,
    0.00000000000000000e+00, 7.07106781186547573e-01, -7.07106781186547573e-01, 7.18407589348473569e-02,
    0.00000000000000000e+00, -7.07106781186547573e-01, -7.07106781186547573e-01, 7.18407589348473569e-02,
    7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 7.18407589348473569e-02,
    7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 7.18407589348473569e-02,
    -7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 7.18407589348473569e-02,
    -7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 7.18407589348473569e-02,
    7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 7.18407589348473569e-02,
    -7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 7.18407589348473569e-02,
    7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 7.18407589348473569e-02,
    -7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 7.18407589348473569e-02,
    5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 7.00371986012484904e-02,
    -5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 7.00371986012484904e-02,
    5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 7.00371986012484904e-02,
    5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 7.00371986012484904e-02,
    -5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 7.00371986012484904e-02,
    5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 7.00371986012484904e-02,
    -5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 7.00371986012484904e-02,
    -5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 7.00371986012484904e-02,
    6.71297344269522589e-01, 6.71297344269522589e-01, 3.14196994182586287e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, 6.71297344269522589e-01, 3.14196994182586287e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, -6.71297344269522589e-01, 3.14196994182586287e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, 6.71297344269522589e-01, -3.14196994182586287e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, -6.71297344269522589e-01, 3.14196994182586287e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, 6.71297344269522589e-01, -3.14196994182586287e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, -6.71297344269522589e-01, -3.14196994182586287e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, -6.71297344269522589e-01, -3.14196994182586287e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, 3.14196994182586287e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, -3.14196994182586287e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, 3.14196994182586287e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, -3.14196994182586287e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, 3.14196994182586287e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, -3.14196994182586287e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    -6.71297344269522589e-01, -3.14196994182586287e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    6.71297344269522589e-01, 3.14196994182586287e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    3.14196994182586287e-01, 6.71297344269522589e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    -3.14196994182586287e-01, 6.71297344269522589e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    3.14196994182586287e-01, -6.71297344269522589e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    3.14196994182586287e-01, 6.71297344269522589e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    -3.14196994182586287e-01, -6.71297344269522589e-01, 6.71297344269522589e-01, 7.04810541680701286e-02,
    -3.14196994182586287e-01, 6.71297344269522589e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    3.14196994182586287e-01, -6.71297344269522589e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    -3.14196994182586287e-01, -6.71297344269522589e-01, -6.71297344269522589e-01, 7.04810541680701286e-02,
    2.89246562757543901e-01, 2.89246562757543901e-01, 9.12509096867473724e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, 2.89246562757543901e-01, 9.12509096867473724e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, -2.89246562757543901e-01, 9.12509096867473724e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, 2.89246562757543901e-01, -9.12509096867473724e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, -2.89246562757543901e-01, 9.12509096867473724e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, 2.89246562757543901e-01, -9.12509096867473724e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, -2.89246562757543901e-01, -9.12509096867473724e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, -2.89246562757543901e-01, -9.12509096867473724e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, 9.12509096867473724e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, -9.12509096867473724e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, 9.12509096867473724e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, -9.12509096867473724e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, 9.12509096867473724e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, -9.12509096867473724e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    -2.89246562757543901e-01, -9.12509096867473724e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    2.89246562757543901e-01, 9.12509096867473724e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    9.12509096867473724e-01, 2.89246562757543901e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    -9.12509096867473724e-01, 2.89246562757543901e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    9.12509096867473724e-01, -2.89246562757543901e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    9.12509096867473724e-01, 2.89246562757543901e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    -9.12509096867473724e-01, -2.89246562757543901e-01, 2.89246562757543901e-01, 6.48203268035104641e-02,
    -9.12509096867473724e-01, 2.89246562757543901e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    9.12509096867473724e-01, -2.89246562757543901e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    -9.12509096867473724e-01, -2.89246562757543901e-01, -2.89246562757543901e-01, 6.48203268035104641e-02,
    4.44693317871743710e-01, 4.44693317871743710e-01, 7.77493219314767114e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, 4.44693317871743710e-01, 7.77493219314767114e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, -4.44693317871743710e-01, 7.77493219314767114e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, 4.44693317871743710e-01, -7.77493219314767114e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, -4.44693317871743710e-01, 7.77493219314767114e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, 4.44693317871743710e-01, -7.77493219314767114e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, -4.44693317871743710e-01, -7.77493219314767114e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, -4.44693317871743710e-01, -7.77493219314767114e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, 7.77493219314767114e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, -7.77493219314767114e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, 7.77493219314767114e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, -7.77493219314767114e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, 7.77493219314767114e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, -7.77493219314767114e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    -4.44693317871743710e-01, -7.77493219314767114e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    4.44693317871743710e-01, 7.77493219314767114e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    7.77493219314767114e-01, 4.44693317871743710e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    -7.77493219314767114e-01, 4.44693317871743710e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    7.77493219314767114e-01, -4.44693317871743710e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    7.77493219314767114e-01, 4.44693317871743710e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    -7.77493219314767114e-01, -4.44693317871743710e-01, 4.44693317871743710e-01, 6.93509275937110037e-02,
    -7.77493219314767114e-01, 4.44693317871743710e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    7.77493219314767114e-01, -4.44693317871743710e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    -7.77493219314767114e-01, -4.44693317871743710e-01, -4.44693317871743710e-01, 6.93509275937110037e-02,
    1.29933544765006709e-01, 1.29933544765006709e-01, 9.82972302707253220e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, 1.29933544765006709e-01, 9.82972302707253220e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, -1.29933544765006709e-01, 9.82972302707253220e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, 1.29933544765006709e-01, -9.82972302707253220e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, -1.29933544765006709e-01, 9.82972302707253220e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, 1.29933544765006709e-01, -9.82972302707253220e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, -1.29933544765006709e-01, -9.82972302707253220e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, -1.29933544765006709e-01, -9.82972302707253220e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, 9.82972302707253220e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, -9.82972302707253220e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, 9.82972302707253220e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, -9.82972302707253220e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, 9.82972302707253220e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, -9.82972302707253220e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    -1.29933544765006709e-01, -9.82972302707253220e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    1.29933544765006709e-01, 9.82972302707253220e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    9.82972302707253220e-01, 1.29933544765006709e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    -9.82972302707253220e-01, 1.29933544765006709e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    9.82972302707253220e-01, -1.29933544765006709e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    9.82972302707253220e-01, 1.29933544765006709e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    -9.82972302707253220e-01, -1.29933544765006709e-01, 1.29933544765006709e-01, 5.16072821665131617e-02,
    -9.82972302707253220e-01, 1.29933544765006709e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    9.82972302707253220e-01, -1.29933544765006709e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    -9.82972302707253220e-01, -1.29933544765006709e-01, -1.29933544765006709e-01, 5.16072821665131617e-02,
    3.45770219761128317e-01, 9.38319218137591560e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    -3.45770219761128317e-01, 9.38319218137591560e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    3.45770219761128317e-01, -9.38319218137591560e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    -3.45770219761128317e-01, -9.38319218137591560e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    9.38319218137591560e-01, 3.45770219761128317e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    -9.38319218137591560e-01, 3.45770219761128317e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    9.38319218137591560e-01, -3.45770219761128317e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    -9.38319218137591560e-01, -3.45770219761128317e-01, 0.00000000000000000e+00, 6.34833699346415564e-02,
    3.45770219761128317e-01, 0.00000000000000000e+00, 9.38319218137591560e-01, 6.34833699346415564e-02,
    -3.45770219761128317e-01, 0.00000000000000000e+00, 9.38319218137591560e-01, 6.34833699346415564e-02,
    3.45770219761128317e-01, 0.00000000000000000e+00, -9.38319218137591560e-01, 6.34833699346415564e-02,
    -3.45770219761128317e-01, 0.00000000000000000e+00, -9.38319218137591560e-01, 6.34833699346415564e-02,
    9.38319218137591560e-01, 0.00000000000000000e+00, 3.45770219761128317e-01, 6.34833699346415564e-02,
    -9.38319218137591560e-01, 0.00000000000000000e+00, 3.45770219761128317e-01, 6.34833699346415564e-02,
    9.38319218137591560e-01, 0.00000000000000000e+00, -3.45770219761128317e-01, 6.34833699346415564e-02,
    -9.38319218137591560e-01, 0.00000000000000000e+00, -3.45770219761128317e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, 3.45770219761128317e-01, 9.38319218137591560e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, -3.45770219761128317e-01, 9.38319218137591560e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, 3.45770219761128317e-01, -9.38319218137591560e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, -3.45770219761128317e-01, -9.38319218137591560e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, 9.38319218137591560e-01, 3.45770219761128317e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, -9.38319218137591560e-01, 3.45770219761128317e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, 9.38319218137591560e-01, -3.45770219761128317e-01, 6.34833699346415564e-02,
    0.00000000000000000e+00, -9.38319218137591560e-01, -3.45770219761128317e-01, 6.34833699346415564e-02,
    1.59041710538353004e-01, 8.36036015482458872e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, 8.36036015482458872e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, -8.36036015482458872e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, 8.36036015482458872e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, -8.36036015482458872e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, -8.36036015482458872e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, 8.36036015482458872e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, -8.36036015482458872e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, 1.59041710538353004e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, 1.59041710538353004e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, -1.59041710538353004e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, 1.59041710538353004e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, -1.59041710538353004e-01, 5.25118572443642018e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, -1.59041710538353004e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, 1.59041710538353004e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, -1.59041710538353004e-01, -5.25118572443642018e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, 1.59041710538353004e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, 1.59041710538353004e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, -1.59041710538353004e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, 1.59041710538353004e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, -1.59041710538353004e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, -1.59041710538353004e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, 1.59041710538353004e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, -1.59041710538353004e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, 8.36036015482458872e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, 8.36036015482458872e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, -8.36036015482458872e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, 8.36036015482458872e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, -8.36036015482458872e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    5.25118572443642018e-01, -8.36036015482458872e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, 8.36036015482458872e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -5.25118572443642018e-01, -8.36036015482458872e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, 5.25118572443642018e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, 5.25118572443642018e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, -5.25118572443642018e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, 5.25118572443642018e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, -5.25118572443642018e-01, 8.36036015482458872e-01, 6.94951574710432202e-02,
    1.59041710538353004e-01, -5.25118572443642018e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, 5.25118572443642018e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    -1.59041710538353004e-01, -5.25118572443642018e-01, -8.36036015482458872e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, 5.25118572443642018e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, 5.25118572443642018e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, -5.25118572443642018e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, 5.25118572443642018e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, -5.25118572443642018e-01, 1.59041710538353004e-01, 6.94951574710432202e-02,
    8.36036015482458872e-01, -5.25118572443642018e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, 5.25118572443642018e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
    -8.36036015482458872e-01, -5.25118572443642018e-01, -1.59041710538353004e-01, 6.94951574710432202e-02,
};

inline constexpr double kLebedev35[1736] = {
    1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.61732254861092245e-03,
    -1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.61732254861092245e-03,
    0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00, 6.61732254861092245e-03,
    0.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 6.61732254861092245e-03,
    0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 6.61732254861092245e-03,
    0.00000000000000000e+00, 0.00000000000000000e+00, -1.00000000000000000e+00, 6.61732254861092245e-03,
    0.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547573e-01, 3.20218765750967110e-02,
    0.00000000000000000e+00, -7.07106781186547573e-01, 7.07106781186547573e-01, 3.20218765750967110e-02,
    0.00000000000000000e+00, 7.07106781186547573e-01, -7.07106781186547573e-01, 3.20218765750967110e-02,
    0.00000000000000000e+00, -7.07106781186547573e-01, -7.07106781186547573e-01, 3.20218765750967110e-02,
    7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 3.20218765750967110e-02,
    7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 3.20218765750967110e-02,
    -7.07106781186547573e-01, 0.00000000000000000e+00, 7.07106781186547573e-01, 3.20218765750967110e-02,
    -7.07106781186547573e-01, 0.00000000000000000e+00, -7.07106781186547573e-01, 3.20218765750967110e-02,
    7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 3.20218765750967110e-02,
    -7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 3.20218765750967110e-02,
    7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 3.20218765750967110e-02,
    -7.07106781186547573e-01, -7.07106781186547573e-01, 0.00000000000000000e+00, 3.20218765750967110e-02,
    5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 3.15707117871507903e-02,
    -5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 3.15707117871507903e-02,
    5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 3.15707117871507903e-02,
    5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 3.15707117871507903e-02,
    -5.77350269189625731e-01, -5.77350269189625731e-01, 5.77350269189625731e-01, 3.15707117871507903e-02,
    5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 3.15707117871507903e-02,
    -5.77350269189625731e-01, 5.77350269189625731e-01, -5.77350269189625731e-01, 3.15707117871507903e-02,
    -5.77350269189625731e-01, -5.77350269189625731e-01, -5.77350269189625731e-01, 3.15707117871507903e-02,
    6.90934630750911105e-01, 6.90934630750911105e-01, 2.12646824707551862e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, 6.90934630750911105e-01, 2.12646824707551862e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, -6.90934630750911105e-01, 2.12646824707551862e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, 6.90934630750911105e-01, -2.12646824707551862e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, -6.90934630750911105e-01, 2.12646824707551862e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, 6.90934630750911105e-01, -2.12646824707551862e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, -6.90934630750911105e-01, -2.12646824707551862e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, -6.90934630750911105e-01, -2.12646824707551862e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, 2.12646824707551862e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, -2.12646824707551862e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, 2.12646824707551862e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, -2.12646824707551862e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, 2.12646824707551862e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, -2.12646824707551862e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    -6.90934630750911105e-01, -2.12646824707551862e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    6.90934630750911105e-01, 2.12646824707551862e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    2.12646824707551862e-01, 6.90934630750911105e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    -2.12646824707551862e-01, 6.90934630750911105e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    2.12646824707551862e-01, -6.90934630750911105e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    2.12646824707551862e-01, 6.90934630750911105e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    -2.12646824707551862e-01, -6.90934630750911105e-01, 6.90934630750911105e-01, 3.17979919696909641e-02,
    -2.12646824707551862e-01, 6.90934630750911105e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    2.12646824707551862e-01, -6.90934630750911105e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    -2.12646824707551862e-01, -6.90934630750911105e-01, -6.90934630750911105e-01, 3.17979919696909641e-02,
    1.77483605460915794e-01, 1.77483605460915794e-01, 9.67987158791472790e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, 1.77483605460915794e-01, 9.67987158791472790e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, -1.77483605460915794e-01, 9.67987158791472790e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, 1.77483605460915794e-01, -9.67987158791472790e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, -1.77483605460915794e-01, 9.67987158791472790e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, 1.77483605460915794e-01, -9.67987158791472790e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, -1.77483605460915794e-01, -9.67987158791472790e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, -1.77483605460915794e-01, -9.67987158791472790e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, 9.67987158791472790e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, -9.67987158791472790e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, 9.67987158791472790e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, -9.67987158791472790e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, 9.67987158791472790e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, -9.67987158791472790e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    -1.77483605460915794e-01, -9.67987158791472790e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    1.77483605460915794e-01, 9.67987158791472790e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    9.67987158791472790e-01, 1.77483605460915794e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    -9.67987158791472790e-01, 1.77483605460915794e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    9.67987158791472790e-01, -1.77483605460915794e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    9.67987158791472790e-01, 1.77483605460915794e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    -9.67987158791472790e-01, -1.77483605460915794e-01, 1.77483605460915794e-01, 2.53121766975907547e-02,
    -9.67987158791472790e-01, 1.77483605460915794e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    9.67987158791472790e-01, -1.77483605460915794e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    -9.67987158791472790e-01, -1.77483605460915794e-01, -1.77483605460915794e-01, 2.53121766975907547e-02,
    4.91434263778474600e-01, 4.91434263778474600e-01, 7.19016501040843470e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, 4.91434263778474600e-01, 7.19016501040843470e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, -4.91434263778474600e-01, 7.19016501040843470e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, 4.91434263778474600e-01, -7.19016501040843470e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, -4.91434263778474600e-01, 7.19016501040843470e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, 4.91434263778474600e-01, -7.19016501040843470e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, -4.91434263778474600e-01, -7.19016501040843470e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, -4.91434263778474600e-01, -7.19016501040843470e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, 7.19016501040843470e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, -7.19016501040843470e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, 7.19016501040843470e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, -7.19016501040843470e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, 7.19016501040843470e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, -7.19016501040843470e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    -4.91434263778474600e-01, -7.19016501040843470e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    4.91434263778474600e-01, 7.19016501040843470e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    7.19016501040843470e-01, 4.91434263778474600e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    -7.19016501040843470e-01, 4.91434263778474600e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    7.19016501040843470e-01, -4.91434263778474600e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    7.19016501040843470e-01, 4.91434263778474600e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    -7.19016501040843470e-01, -4.91434263778474600e-01, 4.91434263778474600e-01, 3.14376056414214025e-02,
    -7.19016501040843470e-01, 4.91434263778474600e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    7.19016501040843470e-01, -4.91434263778474600e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    -7.19016501040843470e-01, -4.91434263778474600e-01, -4.91434263778474600e-01, 3.14376056414214025e-02,
    6.45666470742425558e-01, 6.45666470742425558e-01, 4.07712664897769750e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, 6.45666470742425558e-01, 4.07712664897769750e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, -6.45666470742425558e-01, 4.07712664897769750e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, 6.45666470742425558e-01, -4.07712664897769750e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, -6.45666470742425558e-01, 4.07712664897769750e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, 6.45666470742425558e-01, -4.07712664897769750e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, -6.45666470742425558e-01, -4.07712664897769750e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, -6.45666470742425558e-01, -4.07712664897769750e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, 4.07712664897769750e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, -4.07712664897769750e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, 4.07712664897769750e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, -4.07712664897769750e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, 4.07712664897769750e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, -4.07712664897769750e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    -6.45666470742425558e-01, -4.07712664897769750e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    6.45666470742425558e-01, 4.07712664897769750e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    4.07712664897769750e-01, 6.45666470742425558e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    -4.07712664897769750e-01, 6.45666470742425558e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    4.07712664897769750e-01, -6.45666470742425558e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    4.07712664897769750e-01, 6.45666470742425558e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    -4.07712664897769750e-01, -6.45666470742425558e-01, 6.45666470742425558e-01, 3.15826467688963275e-02,
    -4.07712664897769750e-01, 6.45666470742425558e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    4.07712664897769750e-01, -6.45666470742425558e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    -4.07712664897769750e-01, -6.45666470742425558e-01, -6.45666470742425558e-01, 3.15826467688963275e-02,
    2.86128901030763827e-01, 2.86128901030763827e-01, 9.14472801120872480e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, 2.86128901030763827e-01, 9.14472801120872480e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, -2.86128901030763827e-01, 9.14472801120872480e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, 2.86128901030763827e-01, -9.14472801120872480e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, -2.86128901030763827e-01, 9.14472801120872480e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, 2.86128901030763827e-01, -9.14472801120872480e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, -2.86128901030763827e-01, -9.14472801120872480e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, -2.86128901030763827e-01, -9.14472801120872480e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, 9.14472801120872480e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, -9.14472801120872480e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, 9.14472801120872480e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, -9.14472801120872480e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, 9.14472801120872480e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, -9.14472801120872480e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    -2.86128901030763827e-01, -9.14472801120872480e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    2.86128901030763827e-01, 9.14472801120872480e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    9.14472801120872480e-01, 2.86128901030763827e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    -9.14472801120872480e-01, 2.86128901030763827e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    9.14472801120872480e-01, -2.86128901030763827e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    9.14472801120872480e-01, 2.86128901030763827e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    -9.14472801120872480e-01, -2.86128901030763827e-01, 2.86128901030763827e-01, 2.89365160452207983e-02,
    -9.14472801120872480e-01, 2.86128901030763827e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    9.14472801120872480e-01, -2.86128901030763827e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    -9.14472801120872480e-01, -2.86128901030763827e-01, -2.86128901030763827e-01, 2.89365160452207983e-02,
    7.56808436717801847e-02, 7.56808436717801847e-02, 9.94255912631277883e-01, 1.83782620028355090e-02,
    -7.56808436717801847e-02, 7.56808436717801847e-02, 9.94255912631277883e-01, 1.83782620028355090e-02,
    7.56808436717801847e-02, -7.56808436717801847e-02, 9.94255912631277883e-01, 1.83782620028355090e-02,
    7.56808436717801847e-02, 7.56808436717801847e-02, -9.94255912631277883e-01, 1.83782620028355090e-02,
    -7.56808436717801847e-02, -7.56808436717801847e-02, 9.94255912631277883e-01, 1.83782620028355090e-02,
    -7.56808436717801847e-02, 7.56808436717801847e-02, -9.94255912631277883e-01, 1.83782620028355090e-02,
    7.56808436717801847e-02, -7.56808436717801847e-02, -9.94255912631277883e-01, 1.83782620028355090e-02,
    -7.56808436717801847e-02, -7.56808436717801847e-02, -9.94255912631277883e-01, 1.83782620028355090e-02,
    -7.56808436717801847e-02, 9.94255912631277883e-01, 7.56808436717801847e-02, 1.83782620028355090e-02,
    7.56808436717801847e-02, -9.94255912631277883e-01, 7.56808436717801847e-02, 1.83782620028355090e-02,
    7.56808436717801847e-02, 9.94255912631277883e-01, -7.56808436717801847e-02, 1.83782620028355090e-02,
    -7.56808436717801847e-02, -9.94255912631277883e-01, 7.56808436717801847e-02, 1.83782620028355090e-02,
    -7.56808436717801847e-02, 9.94255912631277883e-01, -7.56808436717801847e-02, 1.83782620028355090e-02,
    7.56808436717801847e-02, -9.94255912631277883e-01, -7.56808436717801847e-02, 1.83782620028355090e-02,
    -7.56808436717801847e-02, -9.94255912631277883e-01, -7.56808436717801847e-02, 1.83782620028355090e-02,
    7.56808436717801847e-02, 9.94255912631277883e-01, 7.56808436717801847e-02, 1.83782620028355090e-02,
    9.94255912631277883e-01, 7.56808436717801847e-02, 7.56808436717801847e-02, 1.83782620028355090e-02,
    -9.94255912631277883e-01, 7.56808436717801847e-02, 7.56808436717801847e-02, 1.83782620028355090e-02,
    9.94255912631277883e-01, -7.56808436717801847e-02, 7.56808436717801847e-02, 1.83782620028355090e-02,
    9.94255912631277883e-01, 7.56808436717801847e-02, -7.56808436717801847e-02, 1.83782620028355090e-02,
    -9.94255912631277883e-01, -7.56808436717801847e-02, 7.56808436717801847e-02, 1.83782620028355090e-02,
    -9.94255912631277883e-01, 7.56808436717801847e-02, -7.56808436717801847e-02, 1.83782620028355090e-02,
    9.94255912631277883e-01, -7.56808436717801847e-02, -7.56808436717801847e-02, 1.83782620028355090e-02,
    -9.94255912631277883e-01, -7.56808436717801847e-02, -7.56808436717801847e-02, 1.83782620028355090e-02,
    3.92725976336800175e-01, 3.92725976336800175e-01, 8.31584400419232317e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, 3.92725976336800175e-01, 8.31584400419232317e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, -3.92725976336800175e-01, 8.31584400419232317e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, 3.92725976336800175e-01, -8.31584400419232317e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, -3.92725976336800175e-01, 8.31584400419232317e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, 3.92725976336800175e-01, -8.31584400419232317e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, -3.92725976336800175e-01, -8.31584400419232317e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, -3.92725976336800175e-01, -8.31584400419232317e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, 8.31584400419232317e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, -8.31584400419232317e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, 8.31584400419232317e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, -8.31584400419232317e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, 8.31584400419232317e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, -8.31584400419232317e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    -3.92725976336800175e-01, -8.31584400419232317e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    3.92725976336800175e-01, 8.31584400419232317e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    8.31584400419232317e-01, 3.92725976336800175e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    -8.31584400419232317e-01, 3.92725976336800175e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    8.31584400419232317e-01, -3.92725976336800175e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    8.31584400419232317e-01, 3.92725976336800175e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    -8.31584400419232317e-01, -3.92725976336800175e-01, 3.92725976336800175e-01, 3.07294689037843141e-02,
    -8.31584400419232317e-01, 3.92725976336800175e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    8.31584400419232317e-01, -3.92725976336800175e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    -8.31584400419232317e-01, -3.92725976336800175e-01, -3.92725976336800175e-01, 3.07294689037843141e-02,
    8.81813287779428800e-01, 4.71598691151315974e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    -8.81813287779428800e-01, 4.71598691151315974e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    8.81813287779428800e-01, -4.71598691151315974e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    -8.81813287779428800e-01, -4.71598691151315974e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    4.71598691151315974e-01, 8.81813287779428800e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    -4.71598691151315974e-01, 8.81813287779428800e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    4.71598691151315974e-01, -8.81813287779428800e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    -4.71598691151315974e-01, -8.81813287779428800e-01, 0.00000000000000000e+00, 3.03784768311363175e-02,
    8.81813287779428800e-01, 0.00000000000000000e+00, 4.71598691151315974e-01, 3.03784768311363175e-02,
    -8.81813287779428800e-01, 0.00000000000000000e+00, 4.71598691151315974e-01, 3.03784768311363175e-02,
    8.81813287779428800e-01, 0.00000000000000000e+00, -4.71598691151315974e-01, 3.03784768311363175e-02,
    -8.81813287779428800e-01, 0.00000000000000000e+00, -4.71598691151315974e-01, 3.03784768311363175e-02,
    4.71598691151315974e-01, 0.00000000000000000e+00, 8.81813287779428800e-01, 3.03784768311363175e-02,
    -4.71598691151315974e-01, 0.00000000000000000e+00, 8.81813287779428800e-01, 3.03784768311363175e-02,
    4.71598691151315974e-01, 0.00000000000000000e+00, -8.81813287779428800e-01, 3.03784768311363175e-02,
    -4.71598691151315974e-01, 0.00000000000000000e+00, -8.81813287779428800e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, 8.81813287779428800e-01, 4.71598691151315974e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, -8.81813287779428800e-01, 4.71598691151315974e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, 8.81813287779428800e-01, -4.71598691151315974e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, -8.81813287779428800e-01, -4.71598691151315974e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, 4.71598691151315974e-01, 8.81813287779428800e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, -4.71598691151315974e-01, 8.81813287779428800e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, 4.71598691151315974e-01, -8.81813287779428800e-01, 3.03784768311363175e-02,
    0.00000000000000000e+00, -4.71598691151315974e-01, -8.81813287779428800e-01, 3.03784768311363175e-02,
    9.77642811118264898e-01, 2.10272522857306798e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    -9.77642811118264898e-01, 2.10272522857306798e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    9.77642811118264898e-01, -2.10272522857306798e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    -9.77642811118264898e-01, -2.10272522857306798e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    2.10272522857306798e-01, 9.77642811118264898e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    -2.10272522857306798e-01, 9.77642811118264898e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    2.10272522857306798e-01, -9.77642811118264898e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    -2.10272522857306798e-01, -9.77642811118264898e-01, 0.00000000000000000e+00, 2.40137220378528540e-02,
    9.77642811118264898e-01, 0.00000000000000000e+00, 2.10272522857306798e-01, 2.40137220378528540e-02,
    -9.77642811118264898e-01, 0.00000000000000000e+00, 2.10272522857306798e-01, 2.40137220378528540e-02,
    9.77642811118264898e-01, 0.00000000000000000e+00, -2.10272522857306798e-01, 2.40137220378528540e-02,
    -9.77642811118264898e-01, 0.00000000000000000e+00, -2.10272522857306798e-01, 2.40137220378528540e-02,
    2.10272522857306798e-01, 0.00000000000000000e+00, 9.77642811118264898e-01, 2.40137220378528540e-02,
    -2.10272522857306798e-01, 0.00000000000000000e+00, 9.77642811118264898e-01, 2.40137220378528540e-02,
    2.10272522857306798e-01, 0.00000000000000000e+00, -9.77642811118264898e-01, 2.40137220378528540e-02,
    -2.10272522857306798e-01, 0.00000000000000000e+00, -9.77642811118264898e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, 9.77642811118264898e-01, 2.10272522857306798e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, -9.77642811118264898e-01, 2.10272522857306798e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, 9.77642811118264898e-01, -2.10272522857306798e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, -9.77642811118264898e-01, -2.10272522857306798e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, 2.10272522857306798e-01, 9.77642811118264898e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, -2.10272522857306798e-01, 9.77642811118264898e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, 2.10272522857306798e-01, -9.77642811118264898e-01, 2.40137220378528540e-02,
    0.00000000000000000e+00, -2.10272522857306798e-01, -9.77642811118264898e-01, 2.40137220378528540e-02,
    2.05482369640304391e-01, 8.68946032287241210e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, 8.68946032287241210e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, -8.68946032287241210e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, 8.68946032287241210e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, -8.68946032287241210e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, -8.68946032287241210e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, 8.68946032287241210e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, -8.68946032287241210e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, 2.05482369640304391e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, 2.05482369640304391e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, -2.05482369640304391e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, 2.05482369640304391e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, -2.05482369640304391e-01, 4.50233038258262497e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, -2.05482369640304391e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, 2.05482369640304391e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, -2.05482369640304391e-01, -4.50233038258262497e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, 2.05482369640304391e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, 2.05482369640304391e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, -2.05482369640304391e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, 2.05482369640304391e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, -2.05482369640304391e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, -2.05482369640304391e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, 2.05482369640304391e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, -2.05482369640304391e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, 8.68946032287241210e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, 8.68946032287241210e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, -8.68946032287241210e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, 8.68946032287241210e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, -8.68946032287241210e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    4.50233038258262497e-01, -8.68946032287241210e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, 8.68946032287241210e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -4.50233038258262497e-01, -8.68946032287241210e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, 4.50233038258262497e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, 4.50233038258262497e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, -4.50233038258262497e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, 4.50233038258262497e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, -4.50233038258262497e-01, 8.68946032287241210e-01, 3.03720386859646641e-02,
    2.05482369640304391e-01, -4.50233038258262497e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, 4.50233038258262497e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    -2.05482369640304391e-01, -4.50233038258262497e-01, -8.68946032287241210e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, 4.50233038258262497e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, 4.50233038258262497e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, -4.50233038258262497e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, 4.50233038258262497e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, -4.50233038258262497e-01, 2.05482369640304391e-01, 3.03720386859646641e-02,
    8.68946032287241210e-01, -4.50233038258262497e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, 4.50233038258262497e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    -8.68946032287241210e-01, -4.50233038258262497e-01, -2.05482369640304391e-01, 3.03720386859646641e-02,
    5.90515704892527138e-01, 7.99927854385728554e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, 7.99927854385728554e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, -7.99927854385728554e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, 7.99927854385728554e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, -7.99927854385728554e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, -7.99927854385728554e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, 7.99927854385728554e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, -7.99927854385728554e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, 5.90515704892527138e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, 5.90515704892527138e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, -5.90515704892527138e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, 5.90515704892527138e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, -5.90515704892527138e-01, 1.06801826075804879e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, -5.90515704892527138e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, 5.90515704892527138e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, -5.90515704892527138e-01, -1.06801826075804879e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, 5.90515704892527138e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, 5.90515704892527138e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, -5.90515704892527138e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, 5.90515704892527138e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, -5.90515704892527138e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, -5.90515704892527138e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, 5.90515704892527138e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, -5.90515704892527138e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, 7.99927854385728554e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, 7.99927854385728554e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, -7.99927854385728554e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, 7.99927854385728554e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, -7.99927854385728554e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    1.06801826075804879e-01, -7.99927854385728554e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, 7.99927854385728554e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -1.06801826075804879e-01, -7.99927854385728554e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, 1.06801826075804879e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, 1.06801826075804879e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, -1.06801826075804879e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, 1.06801826075804879e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, -1.06801826075804879e-01, 7.99927854385728554e-01, 3.15696993854968216e-02,
    5.90515704892527138e-01, -1.06801826075804879e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, 1.06801826075804879e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    -5.90515704892527138e-01, -1.06801826075804879e-01, -7.99927854385728554e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, 1.06801826075804879e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, 1.06801826075804879e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, -1.06801826075804879e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, 1.06801826075804879e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, -1.06801826075804879e-01, 5.90515704892527138e-01, 3.15696993854968216e-02,
    7.99927854385728554e-01, -1.06801826075804879e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, 1.06801826075804879e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    -7.99927854385728554e-01, -1.06801826075804879e-01, -5.90515704892527138e-01, 3.15696993854968216e-02,
    5.55015236107680665e-01, 7.71746262691590079e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, 7.71746262691590079e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, -7.71746262691590079e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, 7.71746262691590079e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, -7.71746262691590079e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, -7.71746262691590079e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, 7.71746262691590079e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, -7.71746262691590079e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, 5.55015236107680665e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, 5.55015236107680665e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, -5.55015236107680665e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, 5.55015236107680665e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, -5.55015236107680665e-01, 3.10428403516654461e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, -5.55015236107680665e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, 5.55015236107680665e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, -5.55015236107680665e-01, -3.10428403516654461e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, 5.55015236107680665e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, 5.55015236107680665e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, -5.55015236107680665e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, 5.55015236107680665e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, -5.55015236107680665e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, -5.55015236107680665e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, 5.55015236107680665e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, -5.55015236107680665e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, 7.71746262691590079e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, 7.71746262691590079e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, -7.71746262691590079e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, 7.71746262691590079e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, -7.71746262691590079e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    3.10428403516654461e-01, -7.71746262691590079e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, 7.71746262691590079e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -3.10428403516654461e-01, -7.71746262691590079e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, 3.10428403516654461e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, 3.10428403516654461e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, -3.10428403516654461e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, 3.10428403516654461e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, -3.10428403516654461e-01, 7.71746262691590079e-01, 3.13737544816504385e-02,
    5.55015236107680665e-01, -3.10428403516654461e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, 3.10428403516654461e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    -5.55015236107680665e-01, -3.10428403516654461e-01, -7.71746262691590079e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, 3.10428403516654461e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, 3.10428403516654461e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, -3.10428403516654461e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, 3.10428403516654461e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, -3.10428403516654461e-01, 5.55015236107680665e-01, 3.13737544816504385e-02,
    7.71746262691590079e-01, -3.10428403516654461e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, 3.10428403516654461e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    -7.71746262691590079e-01, -3.10428403516654461e-01, -5.55015236107680665e-01, 3.13737544816504385e-02,
    9.37180985855372239e-01, 3.34436314534345525e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    -9.37180985855372239e-01, 3.34436314534345525e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    9.37180985855372239e-01, -3.34436314534345525e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    9.37180985855372239e-01, 3.34436314534345525e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -9.37180985855372239e-01, -3.34436314534345525e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    9.37180985855372239e-01, -3.34436314534345525e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -9.37180985855372239e-01, 3.34436314534345525e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -9.37180985855372239e-01, -3.34436314534345525e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    3.34436314534345525e-01, 9.37180985855372239e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    -3.34436314534345525e-01, 9.37180985855372239e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    3.34436314534345525e-01, -9.37180985855372239e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    3.34436314534345525e-01, 9.37180985855372239e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -3.34436314534345525e-01, -9.37180985855372239e-01, 9.92176963642924792e-02, 2.81060420366138625e-02,
    3.34436314534345525e-01, -9.37180985855372239e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -3.34436314534345525e-01, 9.37180985855372239e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    -3.34436314534345525e-01, -9.37180985855372239e-01, -9.92176963642924792e-02, 2.81060420366138625e-02,
    9.92176963642924792e-02, 9.37180985855372239e-01, 3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, 9.37180985855372239e-01, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, -9.37180985855372239e-01, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, 9.37180985855372239e-01, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, -9.37180985855372239e-01, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, -9.37180985855372239e-01, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, 9.37180985855372239e-01, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, -9.37180985855372239e-01, -3.34436314534345525e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, 3.34436314534345525e-01, 9.37180985855372239e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, 3.34436314534345525e-01, 9.37180985855372239e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, -3.34436314534345525e-01, 9.37180985855372239e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, 3.34436314534345525e-01, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, -3.34436314534345525e-01, 9.37180985855372239e-01, 2.81060420366138625e-02,
    9.92176963642924792e-02, -3.34436314534345525e-01, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, 3.34436314534345525e-01, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -9.92176963642924792e-02, -3.34436314534345525e-01, -9.37180985855372239e-01, 2.81060420366138625e-02,
    9.37180985855372239e-01, 9.92176963642924792e-02, 3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.37180985855372239e-01, 9.92176963642924792e-02, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.37180985855372239e-01, -9.92176963642924792e-02, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.37180985855372239e-01, 9.92176963642924792e-02, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.37180985855372239e-01, -9.92176963642924792e-02, 3.34436314534345525e-01, 2.81060420366138625e-02,
    9.37180985855372239e-01, -9.92176963642924792e-02, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.37180985855372239e-01, 9.92176963642924792e-02, -3.34436314534345525e-01, 2.81060420366138625e-02,
    -9.37180985855372239e-01, -9.92176963642924792e-02, -3.34436314534345525e-01, 2.81060420366138625e-02,
    3.34436314534345525e-01, 9.92176963642924792e-02, 9.37180985855372239e-01, 2.81060420366138625e-02,
    -3.34436314534345525e-01, 9.92176963642924792e-02, 9.37180985855372239e-01, 2.81060420366138625e-02,
    3.34436314534345525e-01, -9.92176963642924792e-02, 9.37180985855372239e-01, 2.81060420366138625e-02,
    3.34436314534345525e-01, 9.92176963642924792e-02, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -3.34436314534345525e-01, -9.92176963642924792e-02, 9.37180985855372239e-01, 2.81060420366138625e-02,
    3.34436314534345525e-01, -9.92176963642924792e-02, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -3.34436314534345525e-01, 9.92176963642924792e-02, -9.37180985855372239e-01, 2.81060420366138625e-02,
    -3.34436314534345525e-01, -9.92176963642924792e-02, -9.37180985855372239e-01, 2.81060420366138625e-02,
};

inline constexpr LebedevTable kLebedevTables[] = {
    {11, 50, kLebedev11},
    {17, 110, kLebedev17},
    {23, 194, kLebedev23},
    {35, 434, kLebedev35},
};

}  // namespace qlc::detail
