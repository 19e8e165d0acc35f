#include "fepstat/datasets.hpp"

#include <stdexcept>

namespace fepstat {
namespace {

const std::vector<double> k_dakar1 = {
    212860.9, 267010.7, 258080.4, 578540.3, 244696.2, 215546.2, 290591.1,
    304817.6, 291419.1, 440473.7, 138962.8, 145774.7, 261535.4, 1182688.3,
    231771.8, 108884.2, 583703.4, 340638.7, 143220.2, 361730.6, 488192.8,
    232069.2, 599704.8, 194193.3, 320658.9, 167081.5, 236670.5, 1027139.7,
    226607.0, 567213.9, 714605.4, 107189.7, 160302.3, 363402.8, 761425.0,
    466297.9, 179790.5, 179206.9, 7591873.8, 257280.9, 247732.1, 271506.2,
    242673.6, 495594.4, 204820.5, 182907.2, 314469.1, 390925.7, 388434.4,
    251026.1,
};

const std::vector<double> k_dakar2 = {
    2326347.1, 202446.1, 497640.6, 1505369.5, 206145.4, 670007.1, 688580.6,
    3800902.5, 456837.8, 772329.3, 1268005.4, 944911.9, 579565.7, 345986.3,
    605220.4, 275933.6, 664973.9, 345986.3, 1443230.0, 3111786.7, 190088.7,
    400339.4, 1440574.8, 456007.6, 204802.6, 400339.4, 901053.5, 184492.8,
    900889.4, 324556.9, 612592.7, 603949.7, 705670.0, 255847.5, 711869.7,
    2385253.6, 129207.5, 354822.7, 175583.9, 206145.4, 532207.0, 224469.6,
    364105.7, 609470.4, 751249.5, 129207.5, 2441979.0, 328765.1, 374895.0,
    316734.3,
};

const std::vector<double> k_diour1 = {
    165087.11, 191031.56, 123808.57, 396346.90, 82781.90, 519556.29,
    146485.27, 144961.70, 122684.94, 146399.19, 349398.28, 153086.53,
    292284.34, 160460.77, 194542.64, 82656.72, 214976.94, 151839.94,
    160460.77, 104743.29, 662028.92, 132762.82, 91387.36, 211374.42,
    135755.33, 144137.22, 75249.22, 87559.66, 163498.36, 89995.23, 125835.76,
    300345.97, 257382.04, 215629.97, 109558.28, 214976.94, 87289.32,
    233952.60, 104693.64, 197164.40, 343203.01, 385182.29, 82781.90,
    658761.83, 215069.65, 117829.49, 132192.84, 95234.29, 216132.15,
    396346.90,
};

const std::vector<double> k_diour2 = {
    339293.85, 199794.97, 167231.82, 317826.88, 473868.40, 440738.61,
    150857.01, 205082.61, 480722.21, 160956.28, 313255.46, 267165.79,
    205322.67, 268027.99, 78512.00, 242960.37, 152158.57, 182687.95,
    396531.52, 156383.34, 205082.61, 393941.15, 810344.85, 99643.59,
    107577.92, 242895.53, 299596.63, 138594.52, 205852.70, 94937.99,
    190404.38, 317826.88, 97794.50, 192905.57, 167724.34, 777178.29,
    190377.06, 366065.69, 152322.68, 186260.20, 474140.29, 222936.34,
    325813.46, 138305.38, 514067.87, 77420.32, 211870.89, 189376.45,
    223896.62, 345868.96,
};

struct Entry {
    const char* name;
    const std::vector<double>* values;
    double sum;
    const char* note;
};

const Entry k_registry[] = {
    {"dakar1", &k_dakar1, 24433942.400000002,
     "Dakar household income sample, first survey round (1996)."},
    {"dakar2", &k_dakar2, 38329377.099999994,
     "Dakar household income sample, second survey round (2000). "
     "Transcription note: one cell of the source table is garbled "
     "('129207.5 2&441979.0'); it is read here as 129207.5 "
     "followed by 2441979.0, the only reading consistent with the "
     "accompanying summary statistics."},
    {"diour1", &k_diour1, 10186905.46,
     "Diourbel household income sample, first survey round (1996)."},
    {"diour2", &k_diour2, 13160401.959999999,
     "Diourbel household income sample, second survey round "
     "(2000)."},
};


const Entry* find(const std::string& name) {
    for (const Entry& e : k_registry)
        if (name == e.name)
            return &e;
    return nullptr;
}

}  // namespace

const std::vector<std::string>& dataset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const Entry& e : k_registry)
            v.emplace_back(e.name);
        return v;
    }();
    return names;
}

bool is_dataset(const std::string& name) {
    return find(name) != nullptr;
}

const std::vector<double>& dataset_values(const std::string& name) {
    const Entry* e = find(name);
    if (!e)
        throw std::invalid_argument("dataset_values: unknown dataset '" + name + "'");
    return *e->values;
}

Sample dataset(const std::string& name) {
    return Sample(dataset_values(name), name);
}

DatasetInfo dataset_info(const std::string& name) {
    const Entry* e = find(name);
    if (!e)
        throw std::invalid_argument("dataset_info: unknown dataset '" + name + "'");
    return DatasetInfo{e->name, e->values->size(), e->sum, e->note};
}

}  // namespace fepstat
