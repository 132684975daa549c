#include "degdiam/records.hpp"

namespace degdiam {

// The published table, row for row. Blank inverse cells (self-inverse
// generators) are null. Any discrepancy found by verification is triaged
// into "errata" with computed-vs-claimed detail, never patched silently.
const std::string& embedded_records_json() {
    static const std::string data = R"json({
"records": [
{"delta":4,"diameter":7,"order":1155,"spec":{"family":"cyclic","m":15,"n":77,"a":4},"generators":[[6,2],[10,9]],"inverses":[[9,5],[5,24]],"orders":[35,33]},
{"delta":4,"diameter":8,"order":3025,"spec":{"family":"doubled","m":5,"n":11,"a":4},"generators":[[0,5,1,1],[4,5,1,7]],"inverses":[[0,6,4,7],[1,2,4,0]],"orders":[55,55]},
{"delta":4,"diameter":9,"order":7550,"spec":{"family":"cyclic","m":25,"n":302,"a":171},"generators":[[8,156],[10,31]],"inverses":[[17,82],[15,285]],"orders":[25,10]},
{"delta":4,"diameter":10,"order":16555,"spec":{"family":"cyclic","m":35,"n":473,"a":256},"generators":[[8,342],[3,60]],"inverses":[[27,343],[32,373]],"orders":[35,35]},
{"delta":4,"diameter":11,"order":42861,"spec":{"family":"cyclic","m":39,"n":1099,"a":16},"generators":[[19,863],[28,466]],"inverses":[[20,783],[11,544]],"orders":[39,39]},
{"delta":4,"diameter":12,"order":95634,"spec":{"family":"cyclic","m":66,"n":1449,"a":2},"generators":[[16,1289],[13,1253]],"inverses":[[50,1270],[53,854]],"orders":[99,66]},
{"delta":4,"diameter":13,"order":140868,"spec":{"family":"cyclic","m":84,"n":1677,"a":2},"generators":[[37,462],[44,814]],"inverses":[[47,1212],[40,119]],"orders":[84,21]},
{"delta":5,"diameter":7,"order":5334,"spec":{"family":"cyclic","m":42,"n":127,"a":27},"generators":[[8,50],[27,15],[21,0]],"inverses":[[34,10],[15,99],null],"orders":[21,14,2]},
{"delta":5,"diameter":8,"order":15532,"spec":{"family":"cyclic","m":44,"n":353,"a":207},"generators":[[25,50],[43,41],[22,0]],"inverses":[[19,200],[1,338],null],"orders":[44,44,2]},
{"delta":5,"diameter":9,"order":49932,"spec":{"family":"cyclic","m":36,"n":1387,"a":25},"generators":[[7,440],[28,105],[18,0]],"inverses":[[29,462],[8,1113],null],"orders":[36,9,2]},
{"delta":5,"diameter":10,"order":145584,"spec":{"family":"cyclic","m":48,"n":3033,"a":2300},"generators":[[6,2477],[17,2951],[24,0]],"inverses":[[42,1303],[31,2786],null],"orders":[72,48,2]},
{"delta":6,"diameter":4,"order":360,"spec":{"family":"square","m":40,"n":3,"sigma":[[1,1],[1,0]]},"generators":[[39,1,2],[14,2,0],[32,0,2]],"inverses":[[1,0,2],[26,2,1],[8,0,1]],"orders":[40,20,15]},
{"delta":6,"diameter":5,"order":1230,"spec":{"family":"cyclic","m":15,"n":82,"a":37},"generators":[[7,60],[4,30],[3,37]],"inverses":[[8,68],[11,38],[12,23]],"orders":[15,15,10]},
{"delta":6,"diameter":7,"order":18775,"spec":{"family":"cyclic","m":25,"n":751,"a":481},"generators":[[9,556],[2,570],[3,22]],"inverses":[[16,291],[23,386],[22,605]],"orders":[25,25,25]},
{"delta":6,"diameter":8,"order":69540,"spec":{"family":"cyclic","m":60,"n":1159,"a":8},"generators":[[42,500],[23,1038],[57,403]],"inverses":[[18,545],[37,94],[3,1125]],"orders":[190,60,20]},
{"delta":6,"diameter":9,"order":275540,"spec":{"family":"cyclic","m":92,"n":2995,"a":2202},"generators":[[28,2233],[51,2790],[42,2831]],"inverses":[[64,2932],[41,325],[50,556]],"orders":[115,92,46]},
{"delta":6,"diameter":10,"order":945574,"spec":{"family":"cyclic","m":238,"n":3973,"a":81},"generators":[[211,2137],[30,32],[4,460]],"inverses":[[27,216],[208,2390],[234,412]],"orders":[238,119,119]},
{"delta":7,"diameter":3,"order":144,"spec":{"family":"square","m":16,"n":3,"sigma":[[1,1],[1,0]]},"generators":[[13,0,1],[5,2,2],[10,0,2],[8,0,0]],"inverses":[[3,1,2],[11,2,0],[6,2,2],null],"orders":[16,16,8,2]},
{"delta":7,"diameter":4,"order":600,"spec":{"family":"square","m":24,"n":5,"sigma":[[1,2],[4,0]]},"generators":[[22,0,3],[15,1,3],[18,4,2],[12,0,0]],"inverses":[[2,3,1],[9,0,1],[6,2,1],null],"orders":[12,8,4,2]},
{"delta":7,"diameter":5,"order":2756,"spec":{"family":"cyclic","m":52,"n":53,"a":2},"generators":[[25,45],[30,23],[40,39],[26,0]],"inverses":[[27,37],[22,18],[12,51],null],"orders":[52,26,13,2]},
{"delta":7,"diameter":7,"order":47304,"spec":{"family":"cyclic","m":72,"n":657,"a":5},"generators":[[67,155],[59,160],[66,305],[36,0]],"inverses":[[5,491],[13,100],[6,253],null],"orders":[72,72,36,2]},
{"delta":7,"diameter":8,"order":214500,"spec":{"family":"cyclic","m":60,"n":3575,"a":2},"generators":[[50,1706],[29,3164],[56,3360],[30,0]],"inverses":[[10,1231],[31,2428],[4,3440],null],"orders":[66,60,15,2]},
{"delta":7,"diameter":9,"order":945574,"spec":{"family":"cyclic","m":238,"n":3973,"a":81},"generators":[[71,3406],[109,2984],[184,915],[119,0]],"inverses":[[167,1196],[129,2397],[54,441],null],"orders":[238,238,119,2]},
{"delta":8,"diameter":3,"order":234,"spec":{"family":"cyclic","m":18,"n":13,"a":3},"generators":[[7,5],[5,1],[16,12],[14,2]],"inverses":[[11,7],[13,10],[2,9],[4,7]],"orders":[18,18,9,9]},
{"delta":8,"diameter":4,"order":1012,"spec":{"family":"cyclic","m":22,"n":46,"a":25},"generators":[[1,7],[14,33],[18,19],[4,44]],"inverses":[[21,31],[8,39],[4,41],[18,26]],"orders":[22,22,22,11]},
{"delta":8,"diameter":5,"order":4704,"spec":{"family":"square","m":96,"n":7,"sigma":[[1,6],[5,5]]},"generators":[[5,3,2],[1,5,3],[39,0,4],[36,6,1]],"inverses":[[91,1,5],[95,6,2],[57,3,3],[60,0,4]],"orders":[96,96,32,8]},
{"delta":8,"diameter":7,"order":127134,"spec":{"family":"cyclic","m":126,"n":1009,"a":993},"generators":[[73,719],[60,639],[48,998],[14,447]],"inverses":[[53,953],[66,1007],[78,745],[112,711]],"orders":[126,21,21,9]},
{"delta":8,"diameter":8,"order":654696,"spec":{"family":"cyclic","m":216,"n":3031,"a":625},"generators":[[160,1966],[14,2452],[127,1541],[153,1702]],"inverses":[[56,816],[202,885],[89,1305],[63,678]],"orders":[27,108,216,168]},
{"delta":8,"diameter":9,"order":2408704,"spec":{"family":"doubled","m":16,"n":97,"a":8},"generators":[[10,59,6,89],[3,7,14,92],[1,41,11,79],[5,80,6,13]],"inverses":[[6,57,10,27],[13,68,2,21],[15,7,5,44],[11,26,10,81]],"orders":[776,16,16,16]},
{"delta":9,"diameter":4,"order":1430,"spec":{"family":"cyclic","m":10,"n":143,"a":64},"generators":[[0,84],[7,54],[1,51],[7,121],[5,0]],"inverses":[[0,59],[3,80],[9,64],[3,121],null],"orders":[143,10,10,10,2]},
{"delta":9,"diameter":5,"order":7344,"spec":{"family":"cyclic","m":48,"n":153,"a":5},"generators":[[0,71],[16,86],[47,97],[37,130],[24,0]],"inverses":[[0,82],[32,118],[1,127],[11,100],null],"orders":[153,153,48,48,2]},
{"delta":9,"diameter":7,"order":264024,"spec":{"family":"cyclic","m":72,"n":3667,"a":1923},"generators":[[27,3187],[1,1495],[7,1659],[6,1431],[36,0]],"inverses":[[45,2969],[71,1151],[65,2792],[66,661],null],"orders":[152,72,72,12,2]},
{"delta":9,"diameter":8,"order":1354896,"spec":{"family":"doubled","m":12,"n":97,"a":6},"generators":[[11,34,11,21],[5,75,0,39],[8,76,3,60],[6,22,10,48],[6,0,0,0]],"inverses":[[1,87,1,70],[7,62,0,40],[4,56,9,55],[6,22,2,85],null],"orders":[12,12,12,6,2]},
{"delta":9,"diameter":9,"order":4980696,"spec":{"family":"cyclic","m":1288,"n":3867,"a":11},"generators":[[442,2170],[925,2708],[1276,3002],[408,2678],[644,0]],"inverses":[[846,2609],[363,3857],[12,2002],[880,619],null],"orders":[1932,1288,966,483,2]},
{"delta":10,"diameter":4,"order":2200,"spec":{"family":"cyclic","m":20,"n":110,"a":3},"generators":[[17,1],[3,0],[2,80],[4,33],[8,6]],"inverses":[[3,83],[17,0],[18,40],[16,77],[12,34]],"orders":[20,20,10,10,5]},
{"delta":10,"diameter":5,"order":12288,"spec":{"family":"square","m":48,"n":16,"sigma":[[1,15],[7,8]]},"generators":[[25,7,15],[29,1,2],[43,0,9],[46,6,10],[44,10,15]],"inverses":[[23,15,6],[19,13,5],[5,5,5],[2,14,12],[4,11,8]],"orders":[48,48,48,24,12]},
{"delta":10,"diameter":7,"order":554580,"spec":{"family":"cyclic","m":156,"n":3555,"a":2},"generators":[[32,2159],[66,2090],[4,1182],[41,2287],[3,3039]],"inverses":[[124,1096],[90,3355],[152,2148],[115,3319],[153,1842]],"orders":[585,234,195,156,52]},
{"delta":10,"diameter":8,"order":3069504,"spec":{"family":"doubled","m":24,"n":73,"a":52},"generators":[[19,36,22,45],[3,47,7,41],[19,61,4,69],[14,37,22,39],[18,3,10,26]],"inverses":[[5,15,2,8],[21,61,17,43],[5,68,20,17],[10,61,2,63],[6,65,14,30]],"orders":[24,24,24,12,12]},
{"delta":10,"diameter":9,"order":9003000,"spec":{"family":"cyclic","m":3000,"n":3001,"a":14},"generators":[[77,967],[1864,494],[1624,838],[2380,572],[576,73]],"inverses":[[2923,395],[1136,124],[1376,1044],[620,2799],[2424,1225]],"orders":[3000,375,375,150,125]},
{"delta":11,"diameter":5,"order":17458,"spec":{"family":"cyclic","m":14,"n":1247,"a":729},"generators":[[1,459],[1,134],[3,433],[10,443],[10,325],[7,0]],"inverses":[[13,1154],[13,1228],[11,1199],[4,910],[4,175],null],"orders":[14,14,14,7,7,2]},
{"delta":11,"diameter":7,"order":945574,"spec":{"family":"cyclic","m":238,"n":3973,"a":81},"generators":[[111,2465],[131,211],[59,3508],[32,3841],[188,2240],[119,0]],"inverses":[[127,2668],[107,3540],[179,513],[206,1445],[50,3522],null],"orders":[238,238,238,119,119,2]},
{"delta":12,"diameter":5,"order":26871,"spec":{"family":"cyclic","m":39,"n":689,"a":16},"generators":[[13,383],[5,667],[28,303],[25,41],[36,361],[27,400]],"inverses":[[26,518],[34,235],[11,16],[14,86],[3,627],[12,81]],"orders":[159,39,39,39,13,13]},
{"delta":12,"diameter":8,"order":10007820,"spec":{"family":"cyclic","m":2580,"n":3879,"a":5},"generators":[[428,151],[678,3117],[276,717],[1375,2266],[735,3686],[1665,1590]],"inverses":[[2152,2690],[1902,3102],[2304,3621],[1205,2425],[1845,3830],[915,2058]],"orders":[1935,1290,645,516,172,172]},
{"delta":12,"diameter":9,"order":48532122,"spec":{"family":"cyclic","m":6966,"n":6967,"a":5},"generators":[[4643,2316],[5284,3171],[69,877],[1812,5557],[3987,6878],[6880,2878]],"inverses":[[2323,4128],[1682,2937],[6897,6154],[5154,3426],[2979,1122],[86,54]],"orders":[6966,3483,2322,1161,774,81]},
{"delta":13,"diameter":5,"order":37056,"spec":{"family":"cyclic","m":64,"n":579,"a":125},"generators":[[23,254],[27,422],[9,486],[43,278],[8,124],[12,156],[32,0]],"inverses":[[41,161],[37,44],[55,456],[21,116],[56,428],[52,159],null],"orders":[64,64,64,64,24,16,2]},
{"delta":13,"diameter":8,"order":15027252,"spec":{"family":"cyclic","m":3876,"n":3877,"a":2},"generators":[[2785,2526],[3739,2740],[790,430],[2560,3681],[1716,2226],[1520,223],[1938,0]],"inverses":[[1091,3330],[137,1997],[3086,1901],[1316,3504],[2160,3789],[2356,1970],null],"orders":[3876,3876,1938,969,323,51,2]},
{"delta":13,"diameter":9,"order":72598920,"spec":{"family":"cyclic","m":8520,"n":8521,"a":13},"generators":[[110,233],[294,989],[1492,3266],[4967,2870],[51,1308],[6648,4785],[4260,0]],"inverses":[[8410,7302],[8226,4335],[7028,5171],[3553,5684],[8469,361],[1872,8005],null],"orders":[852,1420,2130,8520,2840,355,2]},
{"delta":14,"diameter":5,"order":53955,"spec":{"family":"cyclic","m":45,"n":1199,"a":234},"generators":[[36,972],[2,533],[32,288],[4,529],[1,508],[34,850],[16,1187]],"inverses":[[9,336],[43,1119],[13,617],[41,481],[44,377],[11,618],[29,565]],"orders":[545,45,45,45,45,45,45]},
{"delta":15,"diameter":5,"order":69972,"spec":{"family":"cyclic","m":84,"n":833,"a":81},"generators":[[80,62],[40,365],[3,565],[45,636],[15,453],[50,644],[35,219],[42,0]],"inverses":[[4,312],[44,502],[81,492],[39,652],[69,520],[34,168],[49,468],null],"orders":[357,357,196,196,196,42,12,2]},
{"delta":15,"diameter":7,"order":7100796,"spec":{"family":"cyclic","m":1884,"n":3769,"a":49},"generators":[[943,2746],[1402,2317],[34,1747],[1131,40],[1040,3137],[1568,145],[342,393],[942,0]],"inverses":[[941,1979],[482,2419],[1850,2321],[753,3119],[844,2872],[316,2312],[1542,461],null],"orders":[1884,942,942,628,471,471,314,2]},
{"delta":15,"diameter":8,"order":38471006,"spec":{"family":"cyclic","m":6202,"n":6203,"a":2},"generators":[[4159,3195],[1486,1096],[3916,3469],[4333,2871],[5215,3672],[2968,321],[5726,2428],[3101,0]],"inverses":[[2043,3638],[4716,3827],[2286,3796],[1869,276],[987,4456],[3234,5123],[476,4180],null],"orders":[6202,3101,3101,886,886,443,443,2]}
],
"errata": []
})json";
    return data;
}

}  // namespace degdiam
