"""Embedded two-channel wavelet filter banks.

Generated by tools/make_filter_tables.py; do not edit by hand.
"""

FILTER_BANKS = {
    'haar': {
        'dec_lo': [
            0.7071067811865476,
            0.7071067811865476,
        ],
        'dec_hi': [
            -0.7071067811865476,
            0.7071067811865476,
        ],
        'rec_lo': [
            0.7071067811865476,
            0.7071067811865476,
        ],
        'rec_hi': [
            0.7071067811865476,
            -0.7071067811865476,
        ],
        'orthogonal': True,
    },
    'db4': {
        'dec_lo': [
            -0.010597401785069032,
            0.0328830116668852,
            0.030841381835560764,
            -0.18703481171909309,
            -0.027983769416859854,
            0.6308807679298589,
            0.7148465705529157,
            0.2303778133088965,
        ],
        'dec_hi': [
            -0.2303778133088965,
            0.7148465705529157,
            -0.6308807679298589,
            -0.027983769416859854,
            0.18703481171909309,
            0.030841381835560764,
            -0.0328830116668852,
            -0.010597401785069032,
        ],
        'rec_lo': [
            0.2303778133088965,
            0.7148465705529157,
            0.6308807679298589,
            -0.027983769416859854,
            -0.18703481171909309,
            0.030841381835560764,
            0.0328830116668852,
            -0.010597401785069032,
        ],
        'rec_hi': [
            -0.010597401785069032,
            -0.0328830116668852,
            0.030841381835560764,
            0.18703481171909309,
            -0.027983769416859854,
            -0.6308807679298589,
            0.7148465705529157,
            -0.2303778133088965,
        ],
        'orthogonal': True,
    },
    'db10': {
        'dec_lo': [
            -1.3264202894521244e-05,
            9.358867032006959e-05,
            -0.00011646685512928545,
            -0.0006858566949597116,
            0.001992405295185056,
            0.001395351747052901,
            -0.010733175483330575,
            0.0036065535669561697,
            0.033212674059341,
            -0.029457536821875813,
            -0.07139414716639708,
            0.09305736460357235,
            0.12736934033579325,
            -0.19594627437737705,
            -0.24984642432731538,
            0.2811723436605775,
            0.6884590394536035,
            0.5272011889317256,
            0.1881768000776915,
            0.026670057900555554,
        ],
        'dec_hi': [
            -0.026670057900555554,
            0.1881768000776915,
            -0.5272011889317256,
            0.6884590394536035,
            -0.2811723436605775,
            -0.24984642432731538,
            0.19594627437737705,
            0.12736934033579325,
            -0.09305736460357235,
            -0.07139414716639708,
            0.029457536821875813,
            0.033212674059341,
            -0.0036065535669561697,
            -0.010733175483330575,
            -0.001395351747052901,
            0.001992405295185056,
            0.0006858566949597116,
            -0.00011646685512928545,
            -9.358867032006959e-05,
            -1.3264202894521244e-05,
        ],
        'rec_lo': [
            0.026670057900555554,
            0.1881768000776915,
            0.5272011889317256,
            0.6884590394536035,
            0.2811723436605775,
            -0.24984642432731538,
            -0.19594627437737705,
            0.12736934033579325,
            0.09305736460357235,
            -0.07139414716639708,
            -0.029457536821875813,
            0.033212674059341,
            0.0036065535669561697,
            -0.010733175483330575,
            0.001395351747052901,
            0.001992405295185056,
            -0.0006858566949597116,
            -0.00011646685512928545,
            9.358867032006959e-05,
            -1.3264202894521244e-05,
        ],
        'rec_hi': [
            -1.3264202894521244e-05,
            -9.358867032006959e-05,
            -0.00011646685512928545,
            0.0006858566949597116,
            0.001992405295185056,
            -0.001395351747052901,
            -0.010733175483330575,
            -0.0036065535669561697,
            0.033212674059341,
            0.029457536821875813,
            -0.07139414716639708,
            -0.09305736460357235,
            0.12736934033579325,
            0.19594627437737705,
            -0.24984642432731538,
            -0.2811723436605775,
            0.6884590394536035,
            -0.5272011889317256,
            0.1881768000776915,
            -0.026670057900555554,
        ],
        'orthogonal': True,
    },
    'coif1': {
        'dec_lo': [
            0.22658426519706856,
            0.7456875589344343,
            0.6074916413856841,
            -0.0771615554957735,
            -0.1269691253962052,
            0.03858077774788675,
        ],
        'dec_hi': [
            -0.03858077774788675,
            -0.1269691253962052,
            0.0771615554957735,
            0.6074916413856841,
            -0.7456875589344343,
            0.22658426519706856,
        ],
        'rec_lo': [
            0.03858077774788675,
            -0.1269691253962052,
            -0.0771615554957735,
            0.6074916413856841,
            0.7456875589344343,
            0.22658426519706856,
        ],
        'rec_hi': [
            0.22658426519706856,
            -0.7456875589344343,
            0.6074916413856841,
            0.0771615554957735,
            -0.1269691253962052,
            -0.03858077774788675,
        ],
        'orthogonal': True,
    },
    'coif4': {
        'dec_lo': [
            -1.7849909144933466e-06,
            -3.2596479400307506e-06,
            3.1229861599195265e-05,
            6.233885431278718e-05,
            -0.0002599743371222568,
            -0.0005890202246332164,
            0.0012665610789256603,
            0.003751434697146086,
            -0.0056582838001308835,
            -0.015211728187697211,
            0.025082253337949608,
            0.03933442260558915,
            -0.09622042453595264,
            -0.06662747236681715,
            0.43438603311435653,
            0.7822389344242826,
            0.41530842700068227,
            -0.05607731960356926,
            -0.08126671024919373,
            0.026682304669604834,
            0.016068947131575025,
            -0.00734616793626805,
            -0.0016294924252267858,
            0.000892313902537003,
        ],
        'dec_hi': [
            -0.000892313902537003,
            -0.0016294924252267858,
            0.00734616793626805,
            0.016068947131575025,
            -0.026682304669604834,
            -0.08126671024919373,
            0.05607731960356926,
            0.41530842700068227,
            -0.7822389344242826,
            0.43438603311435653,
            0.06662747236681715,
            -0.09622042453595264,
            -0.03933442260558915,
            0.025082253337949608,
            0.015211728187697211,
            -0.0056582838001308835,
            -0.003751434697146086,
            0.0012665610789256603,
            0.0005890202246332164,
            -0.0002599743371222568,
            -6.233885431278718e-05,
            3.1229861599195265e-05,
            3.2596479400307506e-06,
            -1.7849909144933466e-06,
        ],
        'rec_lo': [
            0.000892313902537003,
            -0.0016294924252267858,
            -0.00734616793626805,
            0.016068947131575025,
            0.026682304669604834,
            -0.08126671024919373,
            -0.05607731960356926,
            0.41530842700068227,
            0.7822389344242826,
            0.43438603311435653,
            -0.06662747236681715,
            -0.09622042453595264,
            0.03933442260558915,
            0.025082253337949608,
            -0.015211728187697211,
            -0.0056582838001308835,
            0.003751434697146086,
            0.0012665610789256603,
            -0.0005890202246332164,
            -0.0002599743371222568,
            6.233885431278718e-05,
            3.1229861599195265e-05,
            -3.2596479400307506e-06,
            -1.7849909144933466e-06,
        ],
        'rec_hi': [
            -1.7849909144933466e-06,
            3.2596479400307506e-06,
            3.1229861599195265e-05,
            -6.233885431278718e-05,
            -0.0002599743371222568,
            0.0005890202246332164,
            0.0012665610789256603,
            -0.003751434697146086,
            -0.0056582838001308835,
            0.015211728187697211,
            0.025082253337949608,
            -0.03933442260558915,
            -0.09622042453595264,
            0.06662747236681715,
            0.43438603311435653,
            -0.7822389344242826,
            0.41530842700068227,
            0.05607731960356926,
            -0.08126671024919373,
            -0.026682304669604834,
            0.016068947131575025,
            0.00734616793626805,
            -0.0016294924252267858,
            -0.000892313902537003,
        ],
        'orthogonal': True,
    },
    'coif5': {
        'dec_lo': [
            -9.604010112767892e-08,
            -1.6237995172048335e-07,
            2.0612203985788783e-06,
            3.7007277113394796e-06,
            -2.1270221672515614e-05,
            -4.12198619242655e-05,
            0.00014035632812373243,
            0.00030185794166824473,
            -0.0006375589261258812,
            -0.0016616273039298788,
            0.0024315754425382886,
            0.006761520220620417,
            -0.009159507338676163,
            -0.019758391600965465,
            0.03267479946705735,
            0.041287530472117834,
            -0.10556315130733723,
            -0.06203775157498195,
            0.4379823066591633,
            0.7742936228603274,
            0.42157126673075435,
            -0.05204667025355476,
            -0.09192158806008609,
            0.028169744270532353,
            0.023408322118927783,
            -0.010131584846900275,
            -0.004159312627578639,
            0.0021782943778456947,
            0.0003585777411617577,
            -0.000212081862067494,
        ],
        'dec_hi': [
            0.000212081862067494,
            0.0003585777411617577,
            -0.0021782943778456947,
            -0.004159312627578639,
            0.010131584846900275,
            0.023408322118927783,
            -0.028169744270532353,
            -0.09192158806008609,
            0.05204667025355476,
            0.42157126673075435,
            -0.7742936228603274,
            0.4379823066591633,
            0.06203775157498195,
            -0.10556315130733723,
            -0.041287530472117834,
            0.03267479946705735,
            0.019758391600965465,
            -0.009159507338676163,
            -0.006761520220620417,
            0.0024315754425382886,
            0.0016616273039298788,
            -0.0006375589261258812,
            -0.00030185794166824473,
            0.00014035632812373243,
            4.12198619242655e-05,
            -2.1270221672515614e-05,
            -3.7007277113394796e-06,
            2.0612203985788783e-06,
            1.6237995172048335e-07,
            -9.604010112767892e-08,
        ],
        'rec_lo': [
            -0.000212081862067494,
            0.0003585777411617577,
            0.0021782943778456947,
            -0.004159312627578639,
            -0.010131584846900275,
            0.023408322118927783,
            0.028169744270532353,
            -0.09192158806008609,
            -0.05204667025355476,
            0.42157126673075435,
            0.7742936228603274,
            0.4379823066591633,
            -0.06203775157498195,
            -0.10556315130733723,
            0.041287530472117834,
            0.03267479946705735,
            -0.019758391600965465,
            -0.009159507338676163,
            0.006761520220620417,
            0.0024315754425382886,
            -0.0016616273039298788,
            -0.0006375589261258812,
            0.00030185794166824473,
            0.00014035632812373243,
            -4.12198619242655e-05,
            -2.1270221672515614e-05,
            3.7007277113394796e-06,
            2.0612203985788783e-06,
            -1.6237995172048335e-07,
            -9.604010112767892e-08,
        ],
        'rec_hi': [
            -9.604010112767892e-08,
            1.6237995172048335e-07,
            2.0612203985788783e-06,
            -3.7007277113394796e-06,
            -2.1270221672515614e-05,
            4.12198619242655e-05,
            0.00014035632812373243,
            -0.00030185794166824473,
            -0.0006375589261258812,
            0.0016616273039298788,
            0.0024315754425382886,
            -0.006761520220620417,
            -0.009159507338676163,
            0.019758391600965465,
            0.03267479946705735,
            -0.041287530472117834,
            -0.10556315130733723,
            0.06203775157498195,
            0.4379823066591633,
            -0.7742936228603274,
            0.42157126673075435,
            0.05204667025355476,
            -0.09192158806008609,
            -0.028169744270532353,
            0.023408322118927783,
            0.010131584846900275,
            -0.004159312627578639,
            -0.0021782943778456947,
            0.0003585777411617577,
            0.000212081862067494,
        ],
        'orthogonal': True,
    },
    'sym4': {
        'dec_lo': [
            0.032223100604051466,
            -0.012603967262031304,
            -0.09921954357663353,
            0.29785779560530606,
            0.8037387518051321,
            0.497618667632775,
            -0.029635527646002493,
            -0.07576571478950221,
        ],
        'dec_hi': [
            0.07576571478950221,
            -0.029635527646002493,
            -0.497618667632775,
            0.8037387518051321,
            -0.29785779560530606,
            -0.09921954357663353,
            0.012603967262031304,
            0.032223100604051466,
        ],
        'rec_lo': [
            -0.07576571478950221,
            -0.029635527646002493,
            0.497618667632775,
            0.8037387518051321,
            0.29785779560530606,
            -0.09921954357663353,
            -0.012603967262031304,
            0.032223100604051466,
        ],
        'rec_hi': [
            0.032223100604051466,
            0.012603967262031304,
            -0.09921954357663353,
            -0.29785779560530606,
            0.8037387518051321,
            -0.497618667632775,
            -0.029635527646002493,
            0.07576571478950221,
        ],
        'orthogonal': True,
    },
    'sym10': {
        'dec_lo': [
            -0.00045932942100465206,
            5.703608361849501e-05,
            0.004593173585311792,
            -0.0008043589320164513,
            -0.02035493981231111,
            0.00576491203358115,
            0.049994972077375154,
            -0.03199005688242811,
            -0.035536740473819585,
            0.3838267610670763,
            0.7695100370210979,
            0.4716906669384429,
            -0.07088053578323157,
            -0.1594942788849106,
            0.011609893903711319,
            0.04592723923109151,
            -0.0014653825813046104,
            -0.00864129927702215,
            9.563267072285273e-05,
            0.0007701598091144599,
        ],
        'dec_hi': [
            -0.0007701598091144599,
            9.563267072285273e-05,
            0.00864129927702215,
            -0.0014653825813046104,
            -0.04592723923109151,
            0.011609893903711319,
            0.1594942788849106,
            -0.07088053578323157,
            -0.4716906669384429,
            0.7695100370210979,
            -0.3838267610670763,
            -0.035536740473819585,
            0.03199005688242811,
            0.049994972077375154,
            -0.00576491203358115,
            -0.02035493981231111,
            0.0008043589320164513,
            0.004593173585311792,
            -5.703608361849501e-05,
            -0.00045932942100465206,
        ],
        'rec_lo': [
            0.0007701598091144599,
            9.563267072285273e-05,
            -0.00864129927702215,
            -0.0014653825813046104,
            0.04592723923109151,
            0.011609893903711319,
            -0.1594942788849106,
            -0.07088053578323157,
            0.4716906669384429,
            0.7695100370210979,
            0.3838267610670763,
            -0.035536740473819585,
            -0.03199005688242811,
            0.049994972077375154,
            0.00576491203358115,
            -0.02035493981231111,
            -0.0008043589320164513,
            0.004593173585311792,
            5.703608361849501e-05,
            -0.00045932942100465206,
        ],
        'rec_hi': [
            -0.00045932942100465206,
            -5.703608361849501e-05,
            0.004593173585311792,
            0.0008043589320164513,
            -0.02035493981231111,
            -0.00576491203358115,
            0.049994972077375154,
            0.03199005688242811,
            -0.035536740473819585,
            -0.3838267610670763,
            0.7695100370210979,
            -0.4716906669384429,
            -0.07088053578323157,
            0.1594942788849106,
            0.011609893903711319,
            -0.04592723923109151,
            -0.0014653825813046104,
            0.00864129927702215,
            9.563267072285273e-05,
            -0.0007701598091144599,
        ],
        'orthogonal': True,
    },
    'bior2.2': {
        'dec_lo': [
            0.0,
            -0.1767766952966369,
            0.3535533905932738,
            1.0606601717798214,
            0.3535533905932738,
            -0.1767766952966369,
        ],
        'dec_hi': [
            -0.0,
            0.3535533905932738,
            -0.7071067811865476,
            0.3535533905932738,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.3535533905932738,
            0.7071067811865476,
            0.3535533905932738,
            0.0,
            0.0,
        ],
        'rec_hi': [
            0.0,
            0.1767766952966369,
            0.3535533905932738,
            -1.0606601717798214,
            0.3535533905932738,
            0.1767766952966369,
        ],
        'orthogonal': False,
    },
    'bior2.4': {
        'dec_lo': [
            0.0,
            0.03314563036811942,
            -0.06629126073623884,
            -0.1767766952966369,
            0.4198446513295126,
            0.9943689110435825,
            0.4198446513295126,
            -0.1767766952966369,
            -0.06629126073623884,
            0.03314563036811942,
        ],
        'dec_hi': [
            -0.0,
            0.0,
            -0.0,
            0.3535533905932738,
            -0.7071067811865476,
            0.3535533905932738,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.0,
            0.0,
            0.3535533905932738,
            0.7071067811865476,
            0.3535533905932738,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'rec_hi': [
            0.0,
            -0.03314563036811942,
            -0.06629126073623884,
            0.1767766952966369,
            0.4198446513295126,
            -0.9943689110435825,
            0.4198446513295126,
            0.1767766952966369,
            -0.06629126073623884,
            -0.03314563036811942,
        ],
        'orthogonal': False,
    },
    'bior3.3': {
        'dec_lo': [
            0.06629126073623884,
            -0.19887378220871652,
            -0.15467960838455727,
            0.9943689110435825,
            0.9943689110435825,
            -0.15467960838455727,
            -0.19887378220871652,
            0.06629126073623884,
        ],
        'dec_hi': [
            -0.0,
            0.0,
            -0.1767766952966369,
            0.5303300858899107,
            -0.5303300858899107,
            0.1767766952966369,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.0,
            0.1767766952966369,
            0.5303300858899107,
            0.5303300858899107,
            0.1767766952966369,
            0.0,
            0.0,
        ],
        'rec_hi': [
            0.06629126073623884,
            0.19887378220871652,
            -0.15467960838455727,
            -0.9943689110435825,
            0.9943689110435825,
            0.15467960838455727,
            -0.19887378220871652,
            -0.06629126073623884,
        ],
        'orthogonal': False,
    },
    'bior3.7': {
        'dec_lo': [
            0.0030210861012608843,
            -0.009063258303782653,
            -0.01683176542131064,
            0.074663985074019,
            0.03133297870736289,
            -0.301159125922835,
            -0.026499240945345472,
            0.9516421218971786,
            0.9516421218971786,
            -0.026499240945345472,
            -0.301159125922835,
            0.03133297870736289,
            0.074663985074019,
            -0.01683176542131064,
            -0.009063258303782653,
            0.0030210861012608843,
        ],
        'dec_hi': [
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.1767766952966369,
            0.5303300858899107,
            -0.5303300858899107,
            0.1767766952966369,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.1767766952966369,
            0.5303300858899107,
            0.5303300858899107,
            0.1767766952966369,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'rec_hi': [
            0.0030210861012608843,
            0.009063258303782653,
            -0.01683176542131064,
            -0.074663985074019,
            0.03133297870736289,
            0.301159125922835,
            -0.026499240945345472,
            -0.9516421218971786,
            0.9516421218971786,
            0.026499240945345472,
            -0.301159125922835,
            -0.03133297870736289,
            0.074663985074019,
            0.01683176542131064,
            -0.009063258303782653,
            -0.0030210861012608843,
        ],
        'orthogonal': False,
    },
    'bior3.9': {
        'dec_lo': [
            -0.000679744372783699,
            0.002039233118351097,
            0.005060319219611981,
            -0.020618912641105536,
            -0.014112787930175846,
            0.09913478249423216,
            0.012300136269419315,
            -0.32019196836077857,
            0.0020500227115698858,
            0.9421257006782068,
            0.9421257006782068,
            0.0020500227115698858,
            -0.32019196836077857,
            0.012300136269419315,
            0.09913478249423216,
            -0.014112787930175846,
            -0.020618912641105536,
            0.005060319219611981,
            0.002039233118351097,
            -0.000679744372783699,
        ],
        'dec_hi': [
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.1767766952966369,
            0.5303300858899107,
            -0.5303300858899107,
            0.1767766952966369,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.1767766952966369,
            0.5303300858899107,
            0.5303300858899107,
            0.1767766952966369,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'rec_hi': [
            -0.000679744372783699,
            -0.002039233118351097,
            0.005060319219611981,
            0.020618912641105536,
            -0.014112787930175846,
            -0.09913478249423216,
            0.012300136269419315,
            0.32019196836077857,
            0.0020500227115698858,
            -0.9421257006782068,
            0.9421257006782068,
            -0.0020500227115698858,
            -0.32019196836077857,
            -0.012300136269419315,
            0.09913478249423216,
            0.014112787930175846,
            -0.020618912641105536,
            -0.005060319219611981,
            0.002039233118351097,
            0.000679744372783699,
        ],
        'orthogonal': False,
    },
    'bior6.8': {
        'dec_lo': [
            0.0,
            0.0019088317364850261,
            -0.0019142861290808862,
            -0.0169906398676071,
            0.01193456527972673,
            0.049732903490937654,
            -0.07726317316721135,
            -0.09405920349576163,
            0.42079628460983926,
            0.8259229974584397,
            0.42079628460983926,
            -0.09405920349576163,
            -0.07726317316721135,
            0.049732903490937654,
            0.01193456527972673,
            -0.0169906398676071,
            -0.0019142861290808862,
            0.0019088317364850261,
        ],
        'dec_hi': [
            -0.0,
            0.0,
            -0.0,
            0.014426282505622248,
            -0.014467504896774099,
            -0.07872200106266872,
            0.040367979030381904,
            0.41784910915032025,
            -0.7589077294537632,
            0.41784910915032025,
            0.040367979030381904,
            -0.07872200106266872,
            -0.014467504896774099,
            0.014426282505622248,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ],
        'rec_lo': [
            0.0,
            0.0,
            0.0,
            0.014426282505622248,
            0.014467504896774099,
            -0.07872200106266872,
            -0.040367979030381904,
            0.41784910915032025,
            0.7589077294537632,
            0.41784910915032025,
            -0.040367979030381904,
            -0.07872200106266872,
            0.014467504896774099,
            0.014426282505622248,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'rec_hi': [
            0.0,
            -0.0019088317364850261,
            -0.0019142861290808862,
            0.0169906398676071,
            0.01193456527972673,
            -0.049732903490937654,
            -0.07726317316721135,
            0.09405920349576163,
            0.42079628460983926,
            -0.8259229974584397,
            0.42079628460983926,
            0.09405920349576163,
            -0.07726317316721135,
            -0.049732903490937654,
            0.01193456527972673,
            0.0169906398676071,
            -0.0019142861290808862,
            -0.0019088317364850261,
        ],
        'orthogonal': False,
    },
    'rbio3.7': {
        'dec_lo': [
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.1767766952966369,
            0.5303300858899107,
            0.5303300858899107,
            0.1767766952966369,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'dec_hi': [
            -0.0030210861012608843,
            -0.009063258303782653,
            0.01683176542131064,
            0.074663985074019,
            -0.03133297870736289,
            -0.301159125922835,
            0.026499240945345472,
            0.9516421218971786,
            -0.9516421218971786,
            -0.026499240945345472,
            0.301159125922835,
            0.03133297870736289,
            -0.074663985074019,
            -0.01683176542131064,
            0.009063258303782653,
            0.0030210861012608843,
        ],
        'rec_lo': [
            0.0030210861012608843,
            -0.009063258303782653,
            -0.01683176542131064,
            0.074663985074019,
            0.03133297870736289,
            -0.301159125922835,
            -0.026499240945345472,
            0.9516421218971786,
            0.9516421218971786,
            -0.026499240945345472,
            -0.301159125922835,
            0.03133297870736289,
            0.074663985074019,
            -0.01683176542131064,
            -0.009063258303782653,
            0.0030210861012608843,
        ],
        'rec_hi': [
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.1767766952966369,
            -0.5303300858899107,
            0.5303300858899107,
            -0.1767766952966369,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
        ],
        'orthogonal': False,
    },
    'rbio6.8': {
        'dec_lo': [
            0.0,
            0.0,
            0.0,
            0.014426282505622248,
            0.014467504896774099,
            -0.07872200106266872,
            -0.040367979030381904,
            0.41784910915032025,
            0.7589077294537632,
            0.41784910915032025,
            -0.040367979030381904,
            -0.07872200106266872,
            0.014467504896774099,
            0.014426282505622248,
            0.0,
            0.0,
            0.0,
            0.0,
        ],
        'dec_hi': [
            -0.0,
            0.0019088317364850261,
            0.0019142861290808862,
            -0.0169906398676071,
            -0.01193456527972673,
            0.049732903490937654,
            0.07726317316721135,
            -0.09405920349576163,
            -0.42079628460983926,
            0.8259229974584397,
            -0.42079628460983926,
            -0.09405920349576163,
            0.07726317316721135,
            0.049732903490937654,
            -0.01193456527972673,
            -0.0169906398676071,
            0.0019142861290808862,
            0.0019088317364850261,
        ],
        'rec_lo': [
            0.0,
            0.0019088317364850261,
            -0.0019142861290808862,
            -0.0169906398676071,
            0.01193456527972673,
            0.049732903490937654,
            -0.07726317316721135,
            -0.09405920349576163,
            0.42079628460983926,
            0.8259229974584397,
            0.42079628460983926,
            -0.09405920349576163,
            -0.07726317316721135,
            0.049732903490937654,
            0.01193456527972673,
            -0.0169906398676071,
            -0.0019142861290808862,
            0.0019088317364850261,
        ],
        'rec_hi': [
            0.0,
            -0.0,
            0.0,
            -0.014426282505622248,
            0.014467504896774099,
            0.07872200106266872,
            -0.040367979030381904,
            -0.41784910915032025,
            0.7589077294537632,
            -0.41784910915032025,
            -0.040367979030381904,
            0.07872200106266872,
            0.014467504896774099,
            -0.014426282505622248,
            0.0,
            -0.0,
            0.0,
            -0.0,
        ],
        'orthogonal': False,
    },
}
