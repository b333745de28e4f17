#pragma once

#include "gtminer/ml/kmeans.hpp"
#include "gtminer/ml/knn.hpp"
#include "gtminer/ml/mlp.hpp"
#include "gtminer/ml/pca.hpp"
#include "gtminer/ml/preprocess.hpp"
#include "gtminer/ml/svm.hpp"
