#pragma once

#include <quadsg/structure/classify.hpp>
#include <quadsg/structure/instances.hpp>
#include <quadsg/structure/isotropic.hpp>
#include <quadsg/structure/pencil.hpp>
