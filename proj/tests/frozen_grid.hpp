#pragma once

#include <cstdint>

namespace csucb {

struct GridRow {
    int k;
    double c, sigma, delta_min, delta_max, beta;
    double t;
    double mean;
    std::int64_t pulls;
    double ucb, thm1, thm2, thm3, thm4, cap;
};

// 20-point parameter grid; expected columns computed with 50-digit
// arithmetic in an independent implementation.
const GridRow kGrid[] = {
    {1, 1, 1, 0.001, 0.9, 1, 2, 0, 1,
     1.0196669901688090, 4163.7385926549038, 13.940328899126253, 12.564034303866145, 3742996.9387261304, 2.0196669901688090},
    {2, 1.5, 2.5, 0.01, 1.4, 0.8, 10, 0.25, 2,
     1.5641304424392330, 12450.452460044486, 164.90799451166553, 101.83146804071989, 870383.89667040696, 4.2876916416373788},
    {3, 2, 10, 0.05, 2.0, 0.5, 97, 0.5, 7,
     1.4900985858384489, 32964.024509011774, 2275.3901924861318, 900.78543657114338, 263517.77704463277, 7.2391092631305464},
    {5, 3, 40, 0.2, 0.9, 1, 1000, 0.77, 50,
     1.2252281388155439, 373170.92756954331, 34585.448274848973, 9417.3904019663475, 41975.431831944919, 12.656847118302063},
    {8, 0.7, 1, 0.5, 1.4, 0.8, 31623, 0, 1200,
     0.11380707350008664, 443.16092940571949, 11117.846057044641, 33023.818258561215, 1391.6784000615685, 3.4596748698802590},
    {12, 1, 2.5, 0.001, 2.0, 0.5, 100000, 0.25, 1,
     4.4056453406727748, 1036237.6603961845, 57611.160311932805, 124728.16142466625, 1657861324.6544442, 5.1556453406727748},
    {1, 1.5, 10, 0.01, 0.9, 1, 1000000, 0.5, 2,
     3.7189490394340209, 186529.41500703045, 172750.53900948040, 428558.53928716861, 1678586.6964950850, 8.3284220822331586},
    {2, 2, 40, 0.05, 1.4, 0.8, 2, 0.77, 7,
     1.1553978965840588, 21309.019016546262, 215.98254442988188, 38.846303024966369, 18638.527732109024, 4.0393339803376179},
    {3, 3, 1, 0.2, 2.0, 0.5, 10, 0, 50,
     0.26282608848784660, 963.47125868128793, 265.93807953581672, 247.78514619199779, 18665.363936089685, 8.5753832832747577},
    {5, 0.7, 2.5, 0.5, 0.9, 1, 97, 0.25, 1200,
     0.32562002858455707, 366.69763133865287, 519.22083462643679, 382.59008984981027, 252.91221711083537, 2.5336882420956912},
    {8, 1, 10, 0.001, 1.4, 0.8, 1000, 0.5, 1,
     3.7189490394340209, 2652642.9412643973, 7302.8831314992560, 3693.3758958852759, 464201181.67367424, 4.2189490394340209},
    {12, 1.5, 40, 0.01, 2.0, 0.5, 31623, 0.77, 2,
     3.5576925919463348, 3357278.2931372638, 184359.37621417014, 81056.733604885268, 33571771.243402840, 7.4135890068862694},
    {1, 2, 1, 0.05, 0.9, 1, 100000, 0, 7,
     1.5706863012006359, 5550.9937394737029, 21030.895306640366, 108854.94091639532, 99473.839719768461, 10.311290681345550},
    {2, 3, 2.5, 0.2, 1.4, 0.8, 1000000, 0.25, 50,
     0.89378980788680417, 14984.823321042217, 244315.47996178194, 1079929.4859440373, 52229.361427762650, 16.656844164466317},
    {3, 0.7, 10, 0.5, 2.0, 0.5, 2, 0.5, 1200,
     0.52943525056288687, 66.233866085380729, 49.279155635204173, 17.978901336971705, 63.333147898224872, 1.4137668931181663},
    {5, 1, 40, 0.001, 0.9, 1, 10, 0.77, 1,
     2.6284610944249192, 2763136.4719217645, 676.92382353923991, 107.84438274660458, 62169808.329351362, 2.8584610944249192},
    {8, 1.5, 1, 0.01, 1.4, 0.8, 97, 0, 2,
     1.8523048436684328, 39609.040338388965, 904.51754219752105, 986.97490955838756, 6916989.9255717456, 5.4293319473479098},
    {12, 2, 2.5, 0.05, 2.0, 0.5, 1000, 0.25, 7,
     1.4666483773332379, 49857.552012277712, 8978.3119845912728, 8513.3776515302803, 1591604.5150088360, 8.4378980788680417},
    {1, 3, 10, 0.2, 0.9, 1, 31623, 0.5, 50,
     1.0575385183892670, 28012.074177264570, 53214.687942081101, 70658.386169659043, 12591.556281677495, 14.827178013772539},
    {2, 0.7, 40, 0.5, 1.4, 0.8, 100000, 0.77, 1200,
     0.88996314780470203, 4346.4262400988726, 65825.429772679236, 48008.442175686024, 385.82912836823341, 3.6089517384709424},
};

}  // namespace csucb
