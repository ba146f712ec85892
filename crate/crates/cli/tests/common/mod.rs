//! Reference values of ln |W| for the non-Galois rows of the size table:
//! (group, kf, m, series, ln size).
#![allow(clippy::approx_constant)]

pub const FIGURE_POINTS: &[(&str, u64, u64, &str, f64)] = &[
    ("S3", 3, 6, "regular", 1.791759469228055),
    ("S3", 3, 12, "regular", 5.950642552587727),
    ("S3", 3, 18, "regular", 8.383433201236713),
    ("S3", 3, 24, "regular", 10.1095256359474),
    ("S3", 3, 30, "regular", 11.448386943832658),
    ("S3", 3, 36, "regular", 12.542316284596385),
    ("S3", 3, 42, "regular", 13.467220363559935),
    ("S3", 3, 48, "regular", 14.26840871930707),
    ("S3", 3, 54, "regular", 14.975106933245371),
    ("S3", 3, 60, "regular", 15.60727002719233),
    ("S3", 3, 6, "omega", 3.871201010907891),
    ("S3", 3, 12, "omega", 5.950642552587727),
    ("S3", 3, 18, "omega", 7.16703787691222),
    ("S3", 3, 24, "omega", 8.030084094267563),
    ("S3", 3, 30, "omega", 8.699514748210191),
    ("S3", 3, 36, "omega", 9.246479418592056),
    ("S3", 3, 42, "omega", 9.708931458073831),
    ("S3", 3, 48, "omega", 10.1095256359474),
    ("S3", 3, 54, "omega", 10.462874742916549),
    ("S3", 3, 60, "omega", 10.778956289890028),
    ("D4", 4, 8, "regular", 2.0794415416798357),
    ("D4", 4, 16, "regular", 7.6246189861593985),
    ("D4", 4, 24, "regular", 10.868339851024713),
    ("D4", 4, 32, "regular", 13.16979643063896),
    ("D4", 4, 40, "regular", 14.954944841152638),
    ("D4", 4, 48, "regular", 16.413517295504278),
    ("D4", 4, 56, "regular", 17.646722734122342),
    ("D4", 4, 64, "regular", 18.714973875118524),
    ("D4", 4, 72, "regular", 19.65723816036959),
    ("D4", 4, 80, "regular", 20.5001222856322),
    ("D4", 4, 8, "omega", 4.852030263919617),
    ("D4", 4, 16, "omega", 7.6246189861593985),
    ("D4", 4, 24, "omega", 9.246479418592056),
    ("D4", 4, 32, "omega", 10.39720770839918),
    ("D4", 4, 40, "omega", 11.289781913656018),
    ("D4", 4, 48, "omega", 12.019068140831838),
    ("D4", 4, 56, "omega", 12.63567086014087),
    ("D4", 4, 64, "omega", 13.16979643063896),
    ("D4", 4, 72, "omega", 13.640928573264494),
    ("D4", 4, 80, "omega", 14.0623706358958),
    ("A4", 4, 12, "regular", 2.4849066497880004),
    ("A4", 4, 24, "regular", 10.802672816507345),
    ("A4", 4, 36, "regular", 15.668254113805316),
    ("A4", 4, 48, "regular", 19.120438983226688),
    ("A4", 4, 60, "regular", 21.798161598997204),
    ("A4", 4, 72, "regular", 23.98602028052466),
    ("A4", 4, 84, "regular", 25.83582843845176),
    ("A4", 4, 96, "regular", 27.438205149946032),
    ("A4", 4, 108, "regular", 28.85160157782263),
    ("A4", 4, 120, "regular", 30.11592776571655),
    ("A4", 4, 12, "omega", 6.879355804460439),
    ("A4", 4, 24, "omega", 9.65194452670022),
    ("A4", 4, 36, "omega", 11.273804959132878),
    ("A4", 4, 48, "omega", 12.424533248940001),
    ("A4", 4, 60, "omega", 13.31710745419684),
    ("A4", 4, 72, "omega", 14.04639368137266),
    ("A4", 4, 84, "omega", 14.662996400681692),
    ("A4", 4, 96, "omega", 15.197121971179783),
    ("A4", 4, 108, "omega", 15.668254113805316),
    ("A4", 4, 120, "omega", 16.08969617643662),
    ("S4", 4, 24, "regular", 3.1780538303479458),
    ("S4", 4, 48, "regular", 19.81358616378663),
    ("S4", 4, 72, "regular", 29.54474875838258),
    ("S4", 4, 96, "regular", 36.44911849722532),
    ("S4", 4, 120, "regular", 41.804563728766354),
    ("S4", 4, 144, "regular", 46.180281091821264),
    ("S4", 4, 168, "regular", 49.879897407675465),
    ("S4", 4, 192, "regular", 53.08465083066401),
    ("S4", 4, 216, "regular", 55.91144368641721),
    ("S4", 4, 240, "regular", 58.44009606220504),
    ("S4", 4, 24, "omega", 10.345091707260165),
    ("S4", 4, 48, "omega", 13.117680429499947),
    ("S4", 4, 72, "omega", 14.739540861932605),
    ("S4", 4, 96, "omega", 15.890269151739728),
    ("S4", 4, 120, "omega", 16.782843356996565),
    ("S4", 4, 144, "omega", 17.512129584172385),
    ("S4", 4, 168, "omega", 18.128732303481417),
    ("S4", 4, 192, "omega", 18.662857873979508),
    ("S4", 4, 216, "omega", 19.133990016605043),
    ("S4", 4, 240, "omega", 19.555432079236347),
    ("D5", 5, 10, "regular", 2.302585092994046),
    ("D5", 5, 20, "regular", 9.234056898593499),
    ("D5", 5, 30, "regular", 13.288707979675143),
    ("D5", 5, 40, "regular", 16.16552870419295),
    ("D5", 5, 50, "regular", 18.39696421733505),
    ("D5", 5, 60, "regular", 20.220179785274595),
    ("D5", 5, 70, "regular", 21.761686583547178),
    ("D5", 5, 80, "regular", 23.097000509792405),
    ("D5", 5, 90, "regular", 24.27483086635624),
    ("D5", 5, 100, "regular", 25.328436022934504),
    ("D5", 5, 10, "omega", 5.768320995793772),
    ("D5", 5, 20, "omega", 9.234056898593499),
    ("D5", 5, 30, "omega", 11.261382439134321),
    ("D5", 5, 40, "omega", 12.699792801393226),
    ("D5", 5, 50, "omega", 13.815510557964275),
    ("D5", 5, 60, "omega", 14.727118341934048),
    ("D5", 5, 70, "omega", 15.49787174107034),
    ("D5", 5, 80, "omega", 16.16552870419295),
    ("D5", 5, 90, "omega", 16.75444388247487),
    ("D5", 5, 100, "omega", 17.281246460764002),
    ("F5", 5, 20, "regular", 2.995732273553991),
    ("F5", 5, 40, "regular", 16.8586758847529),
    ("F5", 5, 60, "regular", 24.967978046916183),
    ("F5", 5, 80, "regular", 30.721619495951803),
    ("F5", 5, 100, "regular", 35.184490522236),
    ("F5", 5, 120, "regular", 38.83092165811509),
    ("F5", 5, 140, "regular", 41.91393525466026),
    ("F5", 5, 160, "regular", 44.58456310715071),
    ("F5", 5, 180, "regular", 46.940223820278376),
    ("F5", 5, 200, "regular", 49.047434133434905),
    ("F5", 5, 20, "omega", 9.927204079153444),
    ("F5", 5, 40, "omega", 13.392939981953171),
    ("F5", 5, 60, "omega", 15.420265522493992),
    ("F5", 5, 80, "omega", 16.8586758847529),
    ("F5", 5, 100, "omega", 17.974393641323946),
    ("F5", 5, 120, "omega", 18.88600142529372),
    ("F5", 5, 140, "omega", 19.65675482443001),
    ("F5", 5, 160, "omega", 20.324411787552624),
    ("F5", 5, 180, "omega", 20.913326965834543),
    ("F5", 5, 200, "omega", 21.44012954412367),
    ("A5", 5, 60, "regular", 4.0943445622221),
    ("A5", 5, 120, "regular", 45.68317539581882),
    ("A5", 5, 180, "regular", 70.01108188230869),
    ("A5", 5, 240, "regular", 87.27200622941554),
    ("A5", 5, 300, "regular", 100.66061930826812),
    ("A5", 5, 360, "regular", 111.5999127159054),
    ("A5", 5, 420, "regular", 120.8489535055409),
    ("A5", 5, 480, "regular", 128.86083706301227),
    ("A5", 5, 540, "regular", 135.92781920239526),
    ("A5", 5, 600, "regular", 142.24945014186486),
    ("A5", 5, 60, "omega", 16.518877811162103),
    ("A5", 5, 120, "omega", 19.984613713961828),
    ("A5", 5, 180, "omega", 22.01193925450265),
    ("A5", 5, 240, "omega", 23.450349616761557),
    ("A5", 5, 300, "omega", 24.566067373332604),
    ("A5", 5, 360, "omega", 25.47767515730238),
    ("A5", 5, 420, "omega", 26.248428556438668),
    ("A5", 5, 480, "omega", 26.916085519561282),
    ("A5", 5, 540, "omega", 27.5050006978432),
    ("A5", 5, 600, "omega", 28.03180327613233),
    ("S5", 5, 120, "regular", 4.787491742782046),
    ("S5", 5, 240, "regular", 87.96515340997549),
    ("S5", 5, 360, "regular", 136.6209663829552),
    ("S5", 5, 480, "regular", 171.14281507716893),
    ("S5", 5, 600, "regular", 197.92004123487408),
    ("S5", 5, 720, "regular", 219.79862805014864),
    ("S5", 5, 840, "regular", 238.29670962941964),
    ("S5", 5, 960, "regular", 254.32047674436237),
    ("S5", 5, 1080, "regular", 268.45444102312837),
    ("S5", 5, 1200, "regular", 281.0977029020675),
    ("S5", 5, 120, "omega", 20.677760894521775),
    ("S5", 5, 240, "omega", 24.1434967973215),
    ("S5", 5, 360, "omega", 26.170822337862322),
    ("S5", 5, 480, "omega", 27.609232700121225),
    ("S5", 5, 600, "omega", 28.724950456692277),
    ("S5", 5, 720, "omega", 29.636558240662048),
    ("S5", 5, 840, "omega", 30.40731163979834),
    ("S5", 5, 960, "omega", 31.074968602920954),
    ("S5", 5, 1080, "omega", 31.66388378120287),
    ("S5", 5, 1200, "omega", 32.190686359492005),
];
