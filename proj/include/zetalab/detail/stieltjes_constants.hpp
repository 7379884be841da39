// Generated by scripts/gen_stieltjes.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <array>

namespace zetalab::detail {

inline constexpr std::array<long double, 60> stieltjes_gamma = {
    5.77215664901532860606512090082e-1L,
    -7.28158454836767248605863758749e-2L,
    -9.69036319287231848453038603521e-3L,
    2.05383442030334586616004654275e-3L,
    2.32537006546730005746817017753e-3L,
    7.93323817301062701753334877444e-4L,
    -2.38769345430199609872421841908e-4L,
    -5.27289567057751046074097505479e-4L,
    -3.52123353803039509602052165001e-4L,
    -3.43947744180880481779146237982e-5L,
    2.05332814909064794683722289237e-4L,
    2.70184439543903526672902082068e-4L,
    1.67272912105140193353501543341e-4L,
    -2.74638066037601588600076036934e-5L,
    -2.09209262059299945837139697345e-4L,
    -2.83468655320241446642934474997e-4L,
    -1.99696858308969774707784563203e-4L,
    2.62770371099183366994665976305e-5L,
    3.07368408149252826592754751949e-4L,
    5.03605453047355629055596437717e-4L,
    4.66343561511559449400594824434e-4L,
    1.04437769756000115810795674368e-4L,
    -5.41599582203997701655196173174e-4L,
    -1.24396209040824577929974159954e-3L,
    -1.58851127890356156190619661152e-3L,
    -1.07459195273848882472429198735e-3L,
    6.56803518637154431504773003356e-4L,
    3.47783691361853820900735957426e-3L,
    6.40006853170062945810722822195e-3L,
    7.37115177047223913441240242356e-3L,
    3.55772885557316094791353774891e-3L,
    -7.51332599781522893313516008158e-3L,
    -2.57037291084204017934878837803e-2L,
    -4.51067341080802199049828496996e-2L,
    -5.1126928021508464425075820038e-2L,
    -2.03730436038613127057518973025e-2L,
    7.24821588168113337338004442204e-2L,
    2.36026382274301502720981762199e-1L,
    4.28963446384809152736861546539e-1L,
    5.17921842692923718978893057516e-1L,
    2.4872155939461546508449191044e-1L,
    -7.1957484690130035068887391122e-1L,
    -2.63879492733573453578828167565L,
    -5.26493031235502382881103285958L,
    -7.18874588950352728234209482458L,
    -5.0723445899163724922989404048L,
    6.60991560909696581383997510659L,
    3.40397749821587482476611521122e+1L,
    7.86824797632425849560384842094e+1L,
    1.25844387631978469093364086964e+2L,
    1.26823602651322716596725253649e+2L,
    -1.91969118730278558004999227889e+1L,
    -4.63188923026716810808534358239e+2L,
    -1.34065914437689218972710196367e+3L,
    -2.57245474040443551676357438174e+3L,
    -3.45714120864538995380946230761e+3L,
    -2.05527581623197430457282515635e+3L,
    5.37228221320319128418183354596e+3L,
    2.40193893776069881820486103599e+4L,
    5.74243192969640755065710439431e+4L,
};

}  // namespace zetalab::detail
