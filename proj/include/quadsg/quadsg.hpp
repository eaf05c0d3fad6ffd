#pragma once

#include <quadsg/errors.hpp>
#include <quadsg/pit.hpp>
#include <quadsg/polyring.hpp>
#include <quadsg/projection.hpp>
#include <quadsg/qcore.hpp>
#include <quadsg/random.hpp>
#include <quadsg/sg.hpp>
#include <quadsg/structure.hpp>
